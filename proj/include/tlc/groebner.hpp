#ifndef TLC_GROEBNER_HPP
#define TLC_GROEBNER_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tlc/free_module.hpp"

namespace tlc {

class InhomogeneousInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class AmbientMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Gröbner basis of a submodule of a graded free module. Elements are sorted
/// in `order()` and, when reduced, monic with no term divisible by another
/// element's lead term.
template <FieldScalar F>
class GroebnerBasis {
 public:
  using Element = FreeModuleElement<F>;

  GroebnerBasis() = default;
  GroebnerBasis(FreeModule<F> ambient, TermOrder order, std::vector<Element> elements, bool reduced)
      : ambient_(std::move(ambient)), order_(order), elements_(std::move(elements)), reduced_(reduced) {
    index();
  }

  const FreeModule<F>& ambient() const { return ambient_; }
  TermOrder order() const { return order_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return reduced_; }

  /// Index of an element whose lead term divides (comp, m), or npos.
  std::size_t find_reducer(int comp, const Monomial& m) const {
    if (comp < 0 || static_cast<std::size_t>(comp) >= by_comp_.size()) return npos;
    for (std::size_t i : by_comp_[static_cast<std::size_t>(comp)])
      if (elements_[i].lead().mono.divides(m)) return i;
    return npos;
  }

  /// Full reduction. `f` must be sorted in `order()`.
  Element reduce(Element f) const {
    std::size_t pos = 0;
    while (pos < f.size()) {
      const auto& t = f.terms()[pos];
      std::size_t r = find_reducer(t.comp, t.mono);
      if (r == npos) {
        ++pos;
        continue;
      }
      const Element& g = elements_[r];
      F c = -(t.coeff / g.lead().coeff);
      Monomial m = t.mono / g.lead().mono;
      // Terms before pos are larger than everything in m*g and stay untouched.
      Element head, tail;
      head.mutable_terms().assign(f.terms().begin(), f.terms().begin() + static_cast<long>(pos));
      tail.mutable_terms().assign(f.terms().begin() + static_cast<long>(pos), f.terms().end());
      tail = Element::axpy(tail, c, m, g, order_);
      head.mutable_terms().insert(head.mutable_terms().end(), tail.terms().begin(), tail.terms().end());
      f = std::move(head);
    }
    return f;
  }

  /// Normal form of an element given in the default order; result in the
  /// default order as well.
  Element normal_form(const Element& f) const {
    if (f.max_component() >= static_cast<int>(ambient_.rank()))
      throw AmbientMismatch("element does not live in the basis' ambient module");
    Element g = f;
    g.sort(order_);
    g = reduce(std::move(g));
    g.sort({});
    return g;
  }

  bool contains(const Element& f) const { return normal_form(f).is_zero(); }

  /// Lead monomials grouped by component.
  std::vector<std::vector<Monomial>> lead_monomials() const {
    std::vector<std::vector<Monomial>> out(ambient_.rank());
    for (const auto& e : elements_) out[static_cast<std::size_t>(e.lead().comp)].push_back(e.lead().mono);
    return out;
  }

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  void index() {
    by_comp_.assign(ambient_.rank(), {});
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].is_zero()) throw std::logic_error("zero element in Gröbner basis");
      by_comp_.at(static_cast<std::size_t>(elements_[i].lead().comp)).push_back(i);
    }
  }

  FreeModule<F> ambient_;
  TermOrder order_;
  std::vector<Element> elements_;
  bool reduced_ = false;
  std::vector<std::vector<std::size_t>> by_comp_;
};

template <FieldScalar F>
struct GroebnerResult {
  GroebnerBasis<F> basis;
  /// Indices of input generators forming a minimal homogeneous generating set.
  std::vector<std::size_t> minimal_generators;
};

namespace detail {

template <FieldScalar F>
class Buchberger {
 public:
  using Element = FreeModuleElement<F>;

  Buchberger(const FreeModule<F>& ambient, TermOrder order) : ambient_(ambient), order_(order) {}

  GroebnerResult<F> run(const std::vector<Element>& gens) {
    std::vector<std::pair<int, std::size_t>> pending;  // (degree, index)
    std::vector<Element> sorted_gens(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (gens[i].max_component() >= static_cast<int>(ambient_.rank()))
        throw AmbientMismatch("generator outside the ambient free module");
      if (gens[i].is_zero()) continue;
      if (!gens[i].is_homogeneous(ambient_.degrees()))
        throw InhomogeneousInput("inhomogeneous generator");
      sorted_gens[i] = gens[i];
      sorted_gens[i].sort(order_);
      pending.emplace_back(gens[i].degree(ambient_.degrees()), i);
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<std::size_t> minimal;
    std::size_t next_gen = 0;
    while (next_gen < pending.size() || !pairs_.empty()) {
      int d = std::numeric_limits<int>::max();
      if (next_gen < pending.size()) d = pending[next_gen].first;
      for (const auto& p : pairs_) d = std::min(d, p.degree);

      std::vector<Pair> now;
      std::vector<Pair> later;
      for (auto& p : pairs_) (p.degree == d ? now : later).push_back(p);
      pairs_ = std::move(later);
      for (const auto& p : now) {
        if (!p.alive) continue;
        Element s = s_element(p);
        s = reduce(std::move(s));
        if (!s.is_zero()) add(std::move(s));
      }
      while (next_gen < pending.size() && pending[next_gen].first == d) {
        std::size_t idx = pending[next_gen++].second;
        Element r = reduce(sorted_gens[idx]);
        if (!r.is_zero()) {
          minimal.push_back(idx);
          add(std::move(r));
        }
      }
    }
    std::sort(minimal.begin(), minimal.end());
    return {interreduce(), std::move(minimal)};
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    int degree;
    bool alive = true;
  };

  std::size_t find_reducer(int comp, const Monomial& m) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const auto& l = basis_[i].lead();
      if (l.comp == comp && l.mono.divides(m)) return i;
    }
    return GroebnerBasis<F>::npos;
  }

  Element reduce(Element f) const {
    std::size_t pos = 0;
    while (pos < f.size()) {
      const auto& t = f.terms()[pos];
      std::size_t r = find_reducer(t.comp, t.mono);
      if (r == GroebnerBasis<F>::npos) {
        ++pos;
        continue;
      }
      const Element& g = basis_[r];
      F c = -(t.coeff / g.lead().coeff);
      Monomial m = t.mono / g.lead().mono;
      Element head, tail;
      head.mutable_terms().assign(f.terms().begin(), f.terms().begin() + static_cast<long>(pos));
      tail.mutable_terms().assign(f.terms().begin() + static_cast<long>(pos), f.terms().end());
      tail = Element::axpy(tail, c, m, g, order_);
      head.mutable_terms().insert(head.mutable_terms().end(), tail.terms().begin(), tail.terms().end());
      f = std::move(head);
    }
    return f.monic();
  }

  Element s_element(const Pair& p) const {
    const Element& a = basis_[p.i];
    const Element& b = basis_[p.j];
    F one = F::from_integer(1, a.lead().coeff);
    Element left = a.scaled(one, p.lcm / a.lead().mono);
    return Element::axpy(left, -one, p.lcm / b.lead().mono, b, order_);
  }

  /// Inserts a monic element and updates the pair set with the
  /// Gebauer–Möller criteria.
  void add(Element h) {
    const std::size_t k = basis_.size();
    const int comp = h.lead().comp;
    const Monomial lead = h.lead().mono;
    const bool ideal_case = ambient_.rank() == 1;
    basis_.push_back(std::move(h));

    // Old pairs made redundant by the new lead term.
    for (auto& p : pairs_) {
      if (!p.alive || basis_[p.i].lead().comp != comp) continue;
      if (!lead.divides(p.lcm)) continue;
      if (lcm(basis_[p.i].lead().mono, lead) != p.lcm && lcm(basis_[p.j].lead().mono, lead) != p.lcm)
        p.alive = false;
    }

    std::vector<Pair> fresh;
    for (std::size_t i = 0; i < k; ++i) {
      if (basis_[i].lead().comp != comp) continue;
      Monomial l = lcm(basis_[i].lead().mono, lead);
      fresh.push_back({i, k, l, l.degree() + ambient_.degree(static_cast<std::size_t>(comp))});
    }
    // Drop pairs whose lcm is properly divisible by another new pair's lcm.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a)
      for (std::size_t b = 0; b < fresh.size() && keep[a]; ++b)
        if (a != b && fresh[b].lcm.divides(fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm))
          keep[a] = false;
    // Among equal lcms keep one; in the ideal case drop the class entirely
    // when any member has coprime leads.
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      bool coprime_class = false;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (!(fresh[b].lcm == fresh[a].lcm)) continue;
        if (ideal_case && coprime(basis_[fresh[b].i].lead().mono, lead)) coprime_class = true;
        if (b > a) keep[b] = false;
      }
      if (coprime_class) keep[a] = false;
    }
    for (std::size_t a = 0; a < fresh.size(); ++a)
      if (keep[a]) pairs_.push_back(fresh[a]);
    std::erase_if(pairs_, [](const Pair& p) { return !p.alive; });
  }

  GroebnerBasis<F> interreduce() {
    std::vector<Element> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j || basis_[j].lead().comp != basis_[i].lead().comp) continue;
        if (basis_[j].lead().mono.divides(basis_[i].lead().mono) &&
            (!(basis_[j].lead().mono == basis_[i].lead().mono) || j < i))
          redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    GroebnerBasis<F> leads(ambient_, order_, minimal, false);
    std::vector<Element> reduced;
    for (const auto& e : minimal) {
      Element head;
      head.mutable_terms().push_back(e.lead());
      Element tail;
      tail.mutable_terms().assign(e.terms().begin() + 1, e.terms().end());
      tail = leads.reduce(std::move(tail));
      head.mutable_terms().insert(head.mutable_terms().end(), tail.terms().begin(), tail.terms().end());
      reduced.push_back(head.monic());
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Element& a, const Element& b) {
      return order_(a.lead().comp, a.lead().mono, b.lead().comp, b.lead().mono) > 0;
    });
    return GroebnerBasis<F>(ambient_, order_, std::move(reduced), true);
  }

  const FreeModule<F>& ambient_;
  TermOrder order_;
  std::vector<Element> basis_;
  std::vector<Pair> pairs_;
};

}  // namespace detail

/// Reduced Gröbner basis plus the indices of a minimal generating subset of
/// the input. Inhomogeneous input is rejected.
template <FieldScalar F>
GroebnerResult<F> groebner_compute(const FreeModule<F>& ambient,
                                   const std::vector<FreeModuleElement<F>>& gens,
                                   TermOrder order = {}) {
  return detail::Buchberger<F>(ambient, order).run(gens);
}

template <FieldScalar F>
GroebnerBasis<F> groebner_basis(const FreeModule<F>& ambient,
                                const std::vector<FreeModuleElement<F>>& gens,
                                TermOrder order = {}) {
  return groebner_compute(ambient, gens, order).basis;
}

/// Ideal convenience overload: generators are polynomials in rank one.
template <FieldScalar F>
GroebnerBasis<F> groebner_basis(const std::vector<Polynomial<F>>& gens,
                                MonomialOrder order = MonomialOrder::grevlex) {
  if (gens.empty()) throw std::invalid_argument("ideal needs a ring: pass at least one generator");
  FreeModule<F> ambient(gens.front().ring(), {0});
  std::vector<FreeModuleElement<F>> elems;
  for (const auto& g : gens) elems.push_back(FreeModuleElement<F>::from_polynomial(g));
  return groebner_basis(ambient, elems, TermOrder{order});
}

template <FieldScalar F>
FreeModuleElement<F> normal_form(const FreeModuleElement<F>& f, const GroebnerBasis<F>& g) {
  return g.normal_form(f);
}

template <FieldScalar F>
Polynomial<F> normal_form(const Polynomial<F>& f, const GroebnerBasis<F>& g) {
  if (g.ambient().rank() != 1) throw AmbientMismatch("polynomial against a module basis");
  if (!same_ring(f.ring(), g.ambient().ring())) throw AmbientMismatch("ring mismatch");
  return g.normal_form(FreeModuleElement<F>::from_polynomial(f)).component(0, f.ring());
}

/// Minimal homogeneous generating subset, in input order.
template <FieldScalar F>
std::vector<FreeModuleElement<F>> minimal_generators(const FreeModule<F>& ambient,
                                                     const std::vector<FreeModuleElement<F>>& gens) {
  auto res = groebner_compute(ambient, gens);
  std::vector<FreeModuleElement<F>> out;
  for (std::size_t i : res.minimal_generators) out.push_back(gens[i]);
  return out;
}

/// Generating set of the syzygy module of the columns of `m`, as elements of
/// the source module. Computed by a Gröbner basis of the graph
/// {(m(e_i), e_i)} with the target components ranked first; when `minimal`
/// the result is a minimal generating set.
template <FieldScalar F>
std::vector<FreeModuleElement<F>> syzygies(const Matrix<F>& m, bool minimal = true) {
  const int r = static_cast<int>(m.rows());
  std::vector<int> degs = m.target().degrees();
  degs.insert(degs.end(), m.source_degrees().begin(), m.source_degrees().end());
  FreeModule<F> graph(m.ring(), degs);
  F one = m.ring()->one();
  std::vector<FreeModuleElement<F>> gens;
  for (std::size_t i = 0; i < m.cols(); ++i) {
    auto e = FreeModuleElement<F>::basis(r + static_cast<int>(i), one);
    gens.push_back(m.columns()[i] + e);
  }
  auto gb = groebner_basis(graph, gens);
  std::vector<FreeModuleElement<F>> syz;
  for (const auto& e : gb.elements()) {
    if (e.lead().comp < r) continue;
    std::vector<typename FreeModuleElement<F>::Term> ts;
    for (const auto& t : e.terms()) ts.push_back({t.comp - r, t.mono, t.coeff});
    syz.emplace_back(std::move(ts));
  }
  if (!minimal || syz.empty()) return syz;
  return minimal_generators(m.source(), syz);
}

/// Kernel generators of the map (free module on G) -> ambient.
template <FieldScalar F>
std::vector<FreeModuleElement<F>> syzygy_basis(const GroebnerBasis<F>& g) {
  std::vector<FreeModuleElement<F>> cols;
  for (const auto& e : g.elements()) {
    auto c = e;
    c.sort({});
    cols.push_back(std::move(c));
  }
  if (cols.empty()) return {};
  return syzygies(Matrix<F>::from_columns(g.ambient(), cols));
}

/// Generators of ker(m).
template <FieldScalar F>
std::vector<FreeModuleElement<F>> kernel_of_map(const Matrix<F>& m) {
  return syzygies(m);
}

}  // namespace tlc

#endif  // TLC_GROEBNER_HPP
