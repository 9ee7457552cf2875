#ifndef TLC_FREE_MODULE_HPP
#define TLC_FREE_MODULE_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlc/polynomial.hpp"

namespace tlc {

/// Position-over-term order: lower component index is larger; within a
/// component the monomial order decides.
struct TermOrder {
  MonomialOrder monomial = MonomialOrder::grevlex;

  int operator()(int ca, const Monomial& a, int cb, const Monomial& b) const {
    if (ca != cb) return ca < cb ? 1 : -1;
    return compare(a, b, monomial);
  }
  friend bool operator==(const TermOrder&, const TermOrder&) = default;
};

template <FieldScalar F>
struct ModuleTerm {
  int comp;
  Monomial mono;
  F coeff;
  friend bool operator==(const ModuleTerm&, const ModuleTerm&) = default;
};

/// Graded free module sum_c R(-degrees[c]).
template <FieldScalar F>
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(RingPtr<F> ring, std::vector<int> degrees)
      : ring_(std::move(ring)), degrees_(std::move(degrees)) {}

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t rank() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  int degree(std::size_t c) const { return degrees_.at(c); }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.degrees_ == b.degrees_ && same_ring(a.ring_, b.ring_);
  }

 private:
  RingPtr<F> ring_;
  std::vector<int> degrees_;
};

/// Element of a free module: terms sorted descending in a TermOrder (the
/// default order unless a Gröbner computation re-sorted them).
template <FieldScalar F>
class FreeModuleElement {
 public:
  using Term = ModuleTerm<F>;

  FreeModuleElement() = default;
  explicit FreeModuleElement(std::vector<Term> terms, TermOrder order = {}) {
    std::map<std::pair<int, Monomial>, F> acc;
    for (auto& t : terms) {
      auto [it, fresh] = acc.emplace(std::make_pair(t.comp, t.mono), t.coeff);
      if (!fresh) it->second += t.coeff;
    }
    for (auto& [k, c] : acc)
      if (!c.is_zero()) terms_.push_back({k.first, k.second, c});
    sort(order);
  }

  /// Unit vector e_c.
  static FreeModuleElement basis(int c, const F& one) {
    FreeModuleElement e;
    e.terms_.push_back({c, Monomial(), one});
    return e;
  }
  static FreeModuleElement from_polynomial(const Polynomial<F>& p, int comp = 0) {
    FreeModuleElement e;
    for (const auto& [m, c] : p.terms()) e.terms_.push_back({comp, m, c});
    return e;
  }
  static FreeModuleElement from_polynomials(const std::vector<Polynomial<F>>& ps) {
    FreeModuleElement e;
    for (std::size_t c = 0; c < ps.size(); ++c)
      for (const auto& [m, k] : ps[c].terms()) e.terms_.push_back({static_cast<int>(c), m, k});
    return e;
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::vector<Term>& mutable_terms() { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  void sort(TermOrder order) {
    std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
      return order(a.comp, a.mono, b.comp, b.mono) > 0;
    });
  }

  /// Largest component index used, or -1 for zero.
  int max_component() const {
    int m = -1;
    for (const auto& t : terms_) m = std::max(m, t.comp);
    return m;
  }

  /// Polynomial in component c.
  Polynomial<F> component(int c, const RingPtr<F>& ring) const {
    std::vector<typename Polynomial<F>::Term> ts;
    for (const auto& t : terms_)
      if (t.comp == c) ts.emplace_back(t.mono, t.coeff);
    return Polynomial<F>(ring, std::move(ts));
  }

  /// Degree of the terms with respect to the generator degrees of the ambient
  /// module; throws if the element is not homogeneous.
  int degree(const std::vector<int>& gen_degrees) const {
    if (terms_.empty()) throw std::logic_error("degree of zero element");
    int d = term_degree(terms_.front(), gen_degrees);
    for (const auto& t : terms_)
      if (term_degree(t, gen_degrees) != d) throw std::invalid_argument("inhomogeneous module element");
    return d;
  }
  bool is_homogeneous(const std::vector<int>& gen_degrees) const {
    if (terms_.empty()) return true;
    int d = term_degree(terms_.front(), gen_degrees);
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return term_degree(t, gen_degrees) == d; });
  }
  static int term_degree(const Term& t, const std::vector<int>& gen_degrees) {
    return t.mono.degree() + gen_degrees.at(static_cast<std::size_t>(t.comp));
  }

  /// a + c * m * b, with all inputs sorted in `order`.
  static FreeModuleElement axpy(const FreeModuleElement& a, const F& c, const Monomial& m,
                                const FreeModuleElement& b, TermOrder order = {}) {
    FreeModuleElement r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) cmp = -1;
      else if (j == b.terms_.size()) cmp = 1;
      else {
        const auto& bt = b.terms_[j];
        cmp = order(a.terms_[i].comp, a.terms_[i].mono, bt.comp, bt.mono * m);
      }
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        const auto& bt = b.terms_[j++];
        r.terms_.push_back({bt.comp, bt.mono * m, bt.coeff * c});
      } else {
        F v = a.terms_[i].coeff + c * b.terms_[j].coeff;
        if (!v.is_zero()) r.terms_.push_back({a.terms_[i].comp, a.terms_[i].mono, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend FreeModuleElement operator+(const FreeModuleElement& a, const FreeModuleElement& b) {
    if (b.is_zero()) return a;
    F one = F::from_integer(1, b.terms_.front().coeff);
    return axpy(a, one, Monomial(), b);
  }
  friend FreeModuleElement operator-(const FreeModuleElement& a, const FreeModuleElement& b) {
    if (b.is_zero()) return a;
    F minus_one = F::from_integer(-1, b.terms_.front().coeff);
    return axpy(a, minus_one, Monomial(), b);
  }
  FreeModuleElement scaled(const F& c, const Monomial& m = Monomial()) const {
    FreeModuleElement r;
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.comp, t.mono * m, t.coeff * c});
    return r;
  }
  /// Multiplication by a polynomial (result re-sorted in the default order).
  FreeModuleElement times(const Polynomial<F>& p) const {
    FreeModuleElement r;
    for (const auto& [m, c] : p.terms()) r = r + scaled(c, m);
    return r;
  }
  /// Monic rescaling by the inverse lead coefficient.
  FreeModuleElement monic() const {
    if (terms_.empty()) return *this;
    return scaled(terms_.front().coeff.inverse());
  }

  /// Re-indexes components through `map` (old index -> new index).
  FreeModuleElement reindexed(const std::vector<int>& map, TermOrder order = {}) const {
    std::vector<Term> ts;
    for (const auto& t : terms_) ts.push_back({map.at(static_cast<std::size_t>(t.comp)), t.mono, t.coeff});
    return FreeModuleElement(std::move(ts), order);
  }

  friend bool operator==(const FreeModuleElement& a, const FreeModuleElement& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string(const RingPtr<F>& ring, std::size_t rank) const {
    std::string s = "(";
    for (std::size_t c = 0; c < rank; ++c) {
      if (c) s += ", ";
      s += component(static_cast<int>(c), ring).to_string();
    }
    return s + ")";
  }

 private:
  std::vector<Term> terms_;
};

/// Homogeneous map between graded free modules, stored by columns: column j is
/// the image of the j-th basis vector of the source.
template <FieldScalar F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(FreeModule<F> target, std::vector<int> source_degrees,
         std::vector<FreeModuleElement<F>> columns)
      : target_(std::move(target)), source_degrees_(std::move(source_degrees)),
        columns_(std::move(columns)) {
    if (source_degrees_.size() != columns_.size())
      throw std::invalid_argument("matrix shape mismatch: source degrees vs columns");
    for (std::size_t j = 0; j < columns_.size(); ++j) {
      const auto& col = columns_[j];
      if (col.max_component() >= static_cast<int>(target_.rank()))
        throw std::invalid_argument("matrix shape mismatch: component out of range");
      if (!col.is_zero() && col.degree(target_.degrees()) != source_degrees_[j])
        throw std::invalid_argument("matrix is not homogeneous of the stated degrees");
    }
  }

  /// Builds a map whose source degrees are read off the (nonzero) columns.
  static Matrix from_columns(FreeModule<F> target, std::vector<FreeModuleElement<F>> columns) {
    std::vector<int> degs;
    for (const auto& c : columns) {
      if (c.is_zero()) throw std::invalid_argument("zero column needs an explicit degree");
      if (c.max_component() >= static_cast<int>(target.rank()))
        throw std::invalid_argument("column has a component outside the target");
      degs.push_back(c.degree(target.degrees()));
    }
    return Matrix(std::move(target), std::move(degs), std::move(columns));
  }

  /// From a row-major table of polynomials; source degrees inferred per column.
  static Matrix from_rows(const RingPtr<F>& ring, std::vector<int> target_degrees,
                          const std::vector<std::vector<Polynomial<F>>>& rows) {
    std::size_t ncols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
      if (r.size() != ncols) throw std::invalid_argument("ragged matrix rows");
    if (target_degrees.size() != rows.size()) throw std::invalid_argument("row twist count mismatch");
    std::vector<FreeModuleElement<F>> cols;
    std::vector<int> degs;
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<Polynomial<F>> entries;
      for (const auto& r : rows) entries.push_back(r[j]);
      auto col = FreeModuleElement<F>::from_polynomials(entries);
      col.sort({});
      if (col.is_zero()) continue;
      degs.push_back(col.degree(target_degrees));
      cols.push_back(std::move(col));
    }
    return Matrix(FreeModule<F>(ring, std::move(target_degrees)), std::move(degs), std::move(cols));
  }

  const FreeModule<F>& target() const { return target_; }
  const RingPtr<F>& ring() const { return target_.ring(); }
  FreeModule<F> source() const { return FreeModule<F>(target_.ring(), source_degrees_); }
  const std::vector<int>& source_degrees() const { return source_degrees_; }
  const std::vector<FreeModuleElement<F>>& columns() const { return columns_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return columns_.size(); }

  Polynomial<F> entry(std::size_t r, std::size_t c) const {
    return columns_.at(c).component(static_cast<int>(r), ring());
  }

  /// Image of an element of the source module.
  FreeModuleElement<F> apply(const FreeModuleElement<F>& v) const {
    FreeModuleElement<F> out;
    for (const auto& t : v.terms())
      out = out + columns_.at(static_cast<std::size_t>(t.comp)).scaled(t.coeff, t.mono);
    return out;
  }

  /// Composition this ∘ other.
  Matrix compose(const Matrix& other) const {
    std::vector<FreeModuleElement<F>> cols;
    for (const auto& c : other.columns_) cols.push_back(apply(c));
    return Matrix(target_, other.source_degrees_, std::move(cols));
  }

  bool is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const auto& c) { return c.is_zero(); });
  }

  /// True when no entry is a nonzero constant.
  bool is_minimal() const {
    for (const auto& c : columns_)
      for (const auto& t : c.terms())
        if (t.mono.is_one()) return false;
    return true;
  }

  /// Hom(-, R) dual: target degrees become the negated source degrees.
  Matrix transpose() const {
    std::vector<int> tdeg, sdeg;
    for (int d : source_degrees_) tdeg.push_back(-d);
    for (int d : target_.degrees()) sdeg.push_back(-d);
    std::vector<std::vector<typename FreeModuleElement<F>::Term>> cols(rows());
    for (std::size_t j = 0; j < columns_.size(); ++j)
      for (const auto& t : columns_[j].terms())
        cols[static_cast<std::size_t>(t.comp)].push_back({static_cast<int>(j), t.mono, t.coeff});
    std::vector<FreeModuleElement<F>> out;
    for (auto& c : cols) out.emplace_back(std::move(c));
    return Matrix(FreeModule<F>(ring(), std::move(tdeg)), std::move(sdeg), std::move(out));
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t r = 0; r < rows(); ++r) {
      s += "[";
      for (std::size_t c = 0; c < cols(); ++c) {
        if (c) s += ", ";
        s += entry(r, c).to_string();
      }
      s += "]\n";
    }
    return s;
  }

 private:
  FreeModule<F> target_;
  std::vector<int> source_degrees_;
  std::vector<FreeModuleElement<F>> columns_;
};

}  // namespace tlc

#endif  // TLC_FREE_MODULE_HPP
