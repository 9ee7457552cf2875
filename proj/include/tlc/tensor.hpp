#ifndef TLC_TENSOR_HPP
#define TLC_TENSOR_HPP

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlc/filtration.hpp"
#include "tlc/presentation.hpp"

namespace tlc {

/// Polynomial ring on the disjoint union of two variable sets. A name of the
/// right factor that already occurs on the left gets the suffix "_r" (repeated
/// until fresh).
template <FieldScalar F>
struct RingJoin {
  RingPtr<F> left, right, joined;
  /// Variable i of a factor maps to variable left_map[i] / right_map[i].
  std::vector<std::size_t> left_map, right_map;

  std::size_t left_vars() const { return left->nvars(); }
  std::size_t right_vars() const { return right->nvars(); }

  Monomial embed_left(const Monomial& m) const { return embed(m, left_map); }
  Monomial embed_right(const Monomial& m) const { return embed(m, right_map); }
  Polynomial<F> embed_left(const Polynomial<F>& p) const { return embed(p, left_map); }
  Polynomial<F> embed_right(const Polynomial<F>& p) const { return embed(p, right_map); }

  MonomialIdeal embed_left(const MonomialIdeal& i) const { return embed(i, left_map); }
  MonomialIdeal embed_right(const MonomialIdeal& i) const { return embed(i, right_map); }

 private:
  static Monomial embed(const Monomial& m, const std::vector<std::size_t>& map) {
    Monomial out;
    for (std::size_t i = 0; i < map.size(); ++i) out.set(map[i], m[i]);
    return out;
  }
  Polynomial<F> embed(const Polynomial<F>& p, const std::vector<std::size_t>& map) const {
    std::vector<typename Polynomial<F>::Term> ts;
    for (const auto& [m, c] : p.terms()) ts.emplace_back(embed(m, map), c);
    return Polynomial<F>(joined, std::move(ts));
  }
  MonomialIdeal embed(const MonomialIdeal& i, const std::vector<std::size_t>& map) const {
    std::vector<Monomial> g;
    for (const auto& m : i.generators()) g.push_back(embed(m, map));
    return MonomialIdeal(joined->nvars(), std::move(g));
  }
};

template <FieldScalar F>
RingJoin<F> join_rings(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (!(a->field() == b->field())) throw RingError("joining rings over different fields");
  if (a->nvars() + b->nvars() > kMaxVariables)
    throw RingError("joined ring exceeds " + std::to_string(kMaxVariables) + " variables");
  std::vector<std::string> names = a->names();
  std::set<std::string> used(names.begin(), names.end());
  for (auto n : b->names()) {
    while (used.count(n)) n += "_r";
    used.insert(n);
    names.push_back(n);
  }
  RingJoin<F> j;
  j.left = a;
  j.right = b;
  j.joined = make_ring<F>(a->field(), std::move(names));
  for (std::size_t i = 0; i < a->nvars(); ++i) j.left_map.push_back(i);
  for (std::size_t i = 0; i < b->nvars(); ++i) j.right_map.push_back(a->nvars() + i);
  return j;
}

/// L ⊗_k N over the joined ring, with the factors it came from.
template <FieldScalar F>
struct TensorPresentation {
  ModulePresentation<F> module;
  ModulePresentation<F> left, right;
  RingJoin<F> join;
};

/// coker(F1⊗G0 ⊕ F0⊗G1 -> F0⊗G0) with generator (a, b) at index a * rank G0 + b.
template <FieldScalar F>
ModulePresentation<F> tensor_block(const ModulePresentation<F>& l, const ModulePresentation<F>& n,
                                   const RingJoin<F>& join) {
  const std::size_t fa = l.num_generators(), gb = n.num_generators();
  std::vector<int> degs;
  for (std::size_t a = 0; a < fa; ++a)
    for (std::size_t b = 0; b < gb; ++b) degs.push_back(l.generators().degree(a) + n.generators().degree(b));
  FreeModule<F> target(join.joined, degs);
  std::vector<FreeModuleElement<F>> cols;
  std::vector<int> src;
  for (std::size_t j = 0; j < l.relations().cols(); ++j) {
    const auto& col = l.relations().columns()[j];
    if (col.is_zero()) continue;
    for (std::size_t b = 0; b < gb; ++b) {
      std::vector<typename FreeModuleElement<F>::Term> ts;
      for (const auto& t : col.terms())
        ts.push_back({static_cast<int>(static_cast<std::size_t>(t.comp) * gb + b), join.embed_left(t.mono), t.coeff});
      cols.emplace_back(std::move(ts));
      src.push_back(l.relations().source_degrees()[j] + n.generators().degree(b));
    }
  }
  for (std::size_t j = 0; j < n.relations().cols(); ++j) {
    const auto& col = n.relations().columns()[j];
    if (col.is_zero()) continue;
    for (std::size_t a = 0; a < fa; ++a) {
      std::vector<typename FreeModuleElement<F>::Term> ts;
      for (const auto& t : col.terms())
        ts.push_back({static_cast<int>(a * gb + static_cast<std::size_t>(t.comp)), join.embed_right(t.mono), t.coeff});
      cols.emplace_back(std::move(ts));
      src.push_back(n.relations().source_degrees()[j] + l.generators().degree(a));
    }
  }
  return ModulePresentation<F>(Matrix<F>(std::move(target), std::move(src), std::move(cols)));
}

/// L ⊗_k N. Two cyclic factors R/I, R'/J give (join)/(I + J) directly unless
/// `force_block` asks for the general construction.
template <FieldScalar F>
TensorPresentation<F> tensor_modules(const ModulePresentation<F>& l, const ModulePresentation<F>& n,
                                     const RingJoin<F>& join, bool force_block = false) {
  if (!same_ring(l.ring(), join.left) || !same_ring(n.ring(), join.right))
    throw RingError("tensor factors do not match the join");
  if (force_block || l.num_generators() != 1 || n.num_generators() != 1)
    return {tensor_block(l, n, join), l, n, join};
  std::vector<Polynomial<F>> gens;
  for (const auto& c : l.relations().columns())
    if (!c.is_zero()) gens.push_back(join.embed_left(c.component(0, l.ring())));
  for (const auto& c : n.relations().columns())
    if (!c.is_zero()) gens.push_back(join.embed_right(c.component(0, n.ring())));
  int shift = l.generators().degree(0) + n.generators().degree(0);
  return {ModulePresentation<F>::cyclic(join.joined, gens, shift), l, n, join};
}

/// I ⊗ B + A ⊗ J as generators over the join.
template <FieldScalar F>
std::vector<Polynomial<F>> tensor_ideal(const std::vector<Polynomial<F>>& i, const std::vector<Polynomial<F>>& j,
                                        const RingJoin<F>& join) {
  std::vector<Polynomial<F>> out;
  for (const auto& p : i)
    if (!p.is_zero()) out.push_back(join.embed_left(p));
  for (const auto& p : j)
    if (!p.is_zero()) out.push_back(join.embed_right(p));
  return out;
}

template <FieldScalar F>
MonomialIdeal tensor_ideal(const MonomialIdeal& i, const MonomialIdeal& j, const RingJoin<F>& join) {
  return join.embed_left(i) + join.embed_right(j);
}

namespace detail {

/// (K_a/J_L) ⊗ (K'_b/J_N) inside join/(J_L + J_N).
template <FieldScalar F>
MonomialIdeal tensor_step(const MonomialFiltration& f, std::size_t a, const MonomialFiltration& g, std::size_t b,
                          const RingJoin<F>& join) {
  MonomialIdeal base = join.embed_left(f.base) + join.embed_right(g.base);
  return join.embed_left(f.ideal(a)) * join.embed_right(g.ideal(b)) + base;
}

}  // namespace detail

/// The interleaved chain L_i ⊗ N_min(i,s) (i = 0..r) for s <= r; for s > r
/// the factors trade roles. Step cds are the sums of the factor cds.
template <FieldScalar F>
MonomialFiltration tensor_filtration(const MonomialFiltration& f, const MonomialFiltration& g,
                                     const RingJoin<F>& join) {
  const std::size_t r = f.length(), s = g.length();
  MonomialFiltration out{join.embed_left(f.base) + join.embed_right(g.base), {}};
  if (r == 0 || s == 0) return out;  // a zero factor
  const std::size_t top = std::max(r, s);
  for (std::size_t i = 1; i <= top; ++i) {
    std::size_t a = s <= r ? i : std::min(i, r);
    std::size_t b = s <= r ? std::min(i, s) : i;
    out.steps.push_back({detail::tensor_step(f, a, g, b, join), f.steps[a - 1].cd + g.steps[b - 1].cd});
  }
  return out;
}

/// Chain T_c = sum over cd(L_a) + cd(N_b) <= c of L_a ⊗ N_b, one step per
/// attained sum c.
template <FieldScalar F>
MonomialFiltration tensor_filtration_by_cd(const MonomialFiltration& f, const MonomialFiltration& g,
                                           const RingJoin<F>& join) {
  MonomialFiltration out{join.embed_left(f.base) + join.embed_right(g.base), {}};
  std::vector<ExtendedInt> sums;
  for (const auto& x : f.steps)
    for (const auto& y : g.steps) sums.push_back(x.cd + y.cd);
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  for (const auto& c : sums) {
    MonomialIdeal k = out.base;
    for (std::size_t a = 1; a <= f.length(); ++a)
      for (std::size_t b = 1; b <= g.length(); ++b)
        if (f.steps[a - 1].cd + g.steps[b - 1].cd <= c) k = k + detail::tensor_step(f, a, g, b, join);
    out.steps.push_back({k, c});
  }
  return out;
}

}  // namespace tlc

#endif  // TLC_TENSOR_HPP
