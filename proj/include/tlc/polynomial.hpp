#ifndef TLC_POLYNOMIAL_HPP
#define TLC_POLYNOMIAL_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tlc/monomial.hpp"
#include "tlc/scalar.hpp"

namespace tlc {

enum class MonomialOrder { grevlex, lex };

/// Three-way comparison of monomials: negative when a < b.
inline int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = kMaxVariables; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

class RingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Standard-graded polynomial ring k[x_1..x_n].
template <FieldScalar F>
class PolynomialRing {
 public:
  PolynomialRing(FieldSpec field, std::vector<std::string> names)
      : field_(field), names_(std::move(names)) {
    if (names_.size() > kMaxVariables)
      throw RingError("at most " + std::to_string(kMaxVariables) + " variables are supported");
    for (std::size_t i = 0; i < names_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (names_[i] == names_[j]) throw RingError("duplicate variable " + names_[i]);
    if (field_.characteristic != 0 && !is_prime(field_.characteristic))
      throw RingError("field characteristic must be prime");
    one_ = F::one(field_);
  }

  const FieldSpec& field() const { return field_; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  F one() const { return one_; }
  F zero() const { return F::from_integer(0, one_); }
  F scalar(long n) const { return F::from_integer(n, one_); }

  std::optional<std::size_t> index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  /// Irrelevant ideal generator set as monomials x_1..x_n.
  std::vector<Monomial> variables() const {
    std::vector<Monomial> v;
    for (std::size_t i = 0; i < nvars(); ++i) v.push_back(Monomial::variable(i));
    return v;
  }

  std::string to_string() const {
    std::string s = field_.characteristic == 0 ? "QQ[" : "FF " + std::to_string(field_.characteristic) + "[";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i) s += ',';
      s += names_[i];
    }
    return s + "]";
  }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) {
    return a.field_ == b.field_ && a.names_ == b.names_;
  }

 private:
  FieldSpec field_;
  std::vector<std::string> names_;
  F one_;
};

template <FieldScalar F>
using RingPtr = std::shared_ptr<const PolynomialRing<F>>;

template <FieldScalar F>
RingPtr<F> make_ring(FieldSpec field, std::vector<std::string> names) {
  return std::make_shared<const PolynomialRing<F>>(field, std::move(names));
}

template <FieldScalar F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  return a == b || (a && b && *a == *b);
}

/// Polynomial with terms sorted descending in grevlex; no zero coefficients.
template <FieldScalar F>
class Polynomial {
 public:
  using Term = std::pair<Monomial, F>;

  Polynomial() = default;
  explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr<F> ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    std::map<Monomial, F> acc;
    for (auto& [m, c] : terms) {
      auto [it, fresh] = acc.emplace(m, c);
      if (!fresh) it->second += c;
    }
    for (auto& [m, c] : acc)
      if (!c.is_zero()) terms_.emplace_back(m, c);
    sort_terms();
  }

  static Polynomial constant(RingPtr<F> ring, const F& c) {
    return Polynomial(ring, {{Monomial(), c}});
  }
  static Polynomial monomial(RingPtr<F> ring, const Monomial& m, const F& c) {
    return Polynomial(ring, {{m, c}});
  }
  static Polynomial variable(RingPtr<F> ring, std::size_t i) {
    F one = ring->one();
    return Polynomial(ring, {{Monomial::variable(i), one}});
  }

  const RingPtr<F>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& lead() const { return terms_.front(); }

  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.first.degree() != terms_.front().first.degree()) return false;
    return true;
  }
  /// Degree of a nonzero homogeneous polynomial.
  int degree() const {
    if (is_zero()) throw std::logic_error("degree of zero polynomial");
    int d = terms_.front().first.degree();
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const { return is_zero() || (terms_.size() == 1 && terms_[0].first.is_one()); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return combine(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return combine(a, b, true); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_rings(a, b);
    std::map<Monomial, F> acc;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        auto [it, fresh] = acc.emplace(ma * mb, ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    for (auto& [m, c] : acc)
      if (!c.is_zero()) r.terms_.emplace_back(m, c);
    r.sort_terms();
    return r;
  }
  Polynomial scaled(const F& c, const Monomial& m = Monomial()) const {
    Polynomial r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [mt, ct] : terms_) r.terms_.emplace_back(mt * m, ct * c);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || same_ring(a.ring_, b.ring_));
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    static const std::vector<std::string> none;
    const auto& names = ring_ ? ring_->names() : none;
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      const auto& [m, c] = terms_[i];
      std::string cs = c.to_string();
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs = cs.substr(1);
      if (i == 0) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      if (m.is_one()) out += cs;
      else if (cs == "1") out += m.to_string(names);
      else out += cs + "*" + m.to_string(names);
    }
    return out;
  }

 private:
  static void check_rings(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_))
      throw RingError("polynomials live in different rings");
  }
  static Polynomial combine(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_rings(a, b);
    Polynomial r(a.ring_ ? a.ring_ : b.ring_);
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp = i == a.terms_.size()   ? -1
                : j == b.terms_.size() ? 1
                                       : compare(a.terms_[i].first, b.terms_[j].first, MonomialOrder::grevlex);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second);
        ++j;
      } else {
        F c = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!c.is_zero()) r.terms_.emplace_back(a.terms_[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
      return compare(x.first, y.first, MonomialOrder::grevlex) > 0;
    });
  }

  RingPtr<F> ring_;
  std::vector<Term> terms_;
};

/// Which of add / mul to perform in poly_add_mul.
enum class PolyOp { add, mul };

template <FieldScalar F>
Polynomial<F> poly_add_mul(const Polynomial<F>& p, const Polynomial<F>& q, PolyOp op) {
  if (!same_ring(p.ring(), q.ring())) throw RingError("ring mismatch");
  return op == PolyOp::add ? p + q : p * q;
}

}  // namespace tlc

#endif  // TLC_POLYNOMIAL_HPP
