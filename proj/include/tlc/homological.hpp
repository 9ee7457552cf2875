#ifndef TLC_HOMOLOGICAL_HPP
#define TLC_HOMOLOGICAL_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tlc/resolution.hpp"

namespace tlc {

/// Subquotient cycles / boundaries inside a graded free module, as produced
/// by the homology of a complex of cokernels. boundaries ⊆ cycles.
template <FieldScalar F>
class HomologyModule {
 public:
  using Element = FreeModuleElement<F>;

  HomologyModule(FreeModule<F> ambient, std::vector<Element> cycles, std::vector<Element> boundaries)
      : ambient_(std::move(ambient)), cycles_(std::move(cycles)), boundaries_(std::move(boundaries)) {
    series_ = quotient_series(ambient_, boundaries_) - quotient_series(ambient_, cycles_);
  }

  const FreeModule<F>& ambient() const { return ambient_; }
  const std::vector<Element>& cycles() const { return cycles_; }
  const std::vector<Element>& boundaries() const { return boundaries_; }
  const HilbertSeries& hilbert_series() const { return series_; }
  bool is_zero() const { return series_.is_zero(); }
  ExtendedInt krull_dim() const { return series_.pole_order(); }

  /// Minimal presentation of cycles / boundaries.
  ModulePresentation<F> presentation() const {
    const auto& ring = ambient_.ring();
    std::vector<Element> gens;
    for (const auto& c : cycles_)
      if (!c.is_zero()) gens.push_back(c);
    std::vector<int> gen_degs;
    for (const auto& g : gens) gen_degs.push_back(g.degree(ambient_.degrees()));
    if (gens.empty()) return ModulePresentation<F>::free(ring, {});
    std::vector<Element> cols = gens;
    std::vector<int> src = gen_degs;
    for (const auto& b : boundaries_) {
      if (b.is_zero()) continue;
      cols.push_back(b);
      src.push_back(b.degree(ambient_.degrees()));
    }
    auto syz = syzygies(Matrix<F>(ambient_, src, cols));
    const int k = static_cast<int>(gens.size());
    std::vector<Element> rel;
    for (const auto& s : syz) {
      std::vector<typename Element::Term> ts;
      for (const auto& t : s.terms())
        if (t.comp < k) ts.push_back(t);
      Element e(std::move(ts));
      if (!e.is_zero()) rel.push_back(std::move(e));
    }
    FreeModule<F> target(ring, gen_degs);
    return minimal_presentation(ModulePresentation<F>(Matrix<F>::from_columns(target, rel)));
  }

 private:
  FreeModule<F> ambient_;
  std::vector<Element> cycles_;
  std::vector<Element> boundaries_;
  HilbertSeries series_;
};

namespace detail {

/// One term X = G / Rel of a complex of cokernels.
template <FieldScalar F>
struct CokernelTerm {
  FreeModule<F> ambient;
  std::vector<FreeModuleElement<F>> relations;
};

/// {u in cur.ambient : beta(u) in span(next.relations)}.
template <FieldScalar F>
std::vector<FreeModuleElement<F>> preimage_of_relations(const CokernelTerm<F>& cur, const Matrix<F>& beta,
                                                        const CokernelTerm<F>& next) {
  const int n = static_cast<int>(cur.ambient.rank());
  std::vector<FreeModuleElement<F>> cols = beta.columns();
  std::vector<int> src = cur.ambient.degrees();
  for (const auto& r : next.relations) {
    if (r.is_zero()) continue;
    cols.push_back(r);
    src.push_back(r.degree(next.ambient.degrees()));
  }
  auto syz = syzygies(Matrix<F>(next.ambient, src, cols));
  std::vector<FreeModuleElement<F>> out;
  for (const auto& s : syz) {
    std::vector<typename FreeModuleElement<F>::Term> ts;
    for (const auto& t : s.terms())
      if (t.comp < n) ts.push_back(t);
    FreeModuleElement<F> e(std::move(ts));
    if (!e.is_zero()) out.push_back(std::move(e));
  }
  return out;
}

/// Homology at `cur` of prev --alpha--> cur --beta--> next (either map may be
/// absent at the ends).
template <FieldScalar F>
HomologyModule<F> homology(const CokernelTerm<F>& cur, const Matrix<F>* alpha, const Matrix<F>* beta,
                           const CokernelTerm<F>* next) {
  std::vector<FreeModuleElement<F>> cycles;
  F one = cur.ambient.ring()->one();
  if (beta != nullptr) {
    cycles = preimage_of_relations(cur, *beta, *next);
  } else {
    for (std::size_t c = 0; c < cur.ambient.rank(); ++c)
      cycles.push_back(FreeModuleElement<F>::basis(static_cast<int>(c), one));
  }
  std::vector<FreeModuleElement<F>> boundaries;
  for (const auto& r : cur.relations)
    if (!r.is_zero()) boundaries.push_back(r);
  if (alpha != nullptr)
    for (const auto& c : alpha->columns())
      if (!c.is_zero()) boundaries.push_back(c);
  return HomologyModule<F>(cur.ambient, std::move(cycles), std::move(boundaries));
}

/// Block-diagonal copies of `rel` (columns in G0) inside G0^blocks with
/// per-block degree offsets.
template <FieldScalar F>
CokernelTerm<F> block_term(const Matrix<F>& rel, const std::vector<int>& block_shift) {
  const int g = static_cast<int>(rel.rows());
  std::vector<int> degs;
  for (int s : block_shift)
    for (int d : rel.target().degrees()) degs.push_back(d + s);
  CokernelTerm<F> term{FreeModule<F>(rel.ring(), degs), {}};
  for (std::size_t a = 0; a < block_shift.size(); ++a)
    for (const auto& col : rel.columns()) {
      if (col.is_zero()) continue;
      std::vector<typename FreeModuleElement<F>::Term> ts;
      for (const auto& t : col.terms()) ts.push_back({static_cast<int>(a) * g + t.comp, t.mono, t.coeff});
      term.relations.emplace_back(std::move(ts));
    }
  return term;
}

/// The map G0^{cols} -> G0^{rows} induced by a polynomial matrix acting
/// blockwise: entry (r, c) of `entries` times the identity of G0.
template <FieldScalar F>
Matrix<F> block_map(const CokernelTerm<F>& from, const CokernelTerm<F>& to, std::size_t g,
                    const std::vector<std::vector<Polynomial<F>>>& entries) {
  std::vector<FreeModuleElement<F>> cols;
  const std::size_t nfrom = from.ambient.rank() / (g == 0 ? 1 : g);
  for (std::size_t a = 0; a < nfrom; ++a)
    for (std::size_t c = 0; c < g; ++c) {
      std::vector<typename FreeModuleElement<F>::Term> ts;
      for (std::size_t r = 0; r < entries.size(); ++r)
        for (const auto& [m, k] : entries[r][a].terms())
          ts.push_back({static_cast<int>(r * g + c), m, k});
      cols.emplace_back(std::move(ts));
    }
  return Matrix<F>(to.ambient, from.ambient.degrees(), std::move(cols));
}

template <FieldScalar F>
std::vector<std::vector<Polynomial<F>>> entries_of(const Matrix<F>& m) {
  std::vector<std::vector<Polynomial<F>>> e(m.rows(), std::vector<Polynomial<F>>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) e[r][c] = m.entry(r, c);
  return e;
}

template <FieldScalar F>
std::vector<std::vector<Polynomial<F>>> transposed(const std::vector<std::vector<Polynomial<F>>>& e,
                                                   std::size_t rows, std::size_t cols) {
  std::vector<std::vector<Polynomial<F>>> t(cols, std::vector<Polynomial<F>>(rows));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = e[r][c];
  return t;
}

}  // namespace detail

/// Ext^i or Tor_i modules for i = 0..up_to.
template <FieldScalar F>
struct ExtTorTable {
  std::vector<HomologyModule<F>> modules;

  const HomologyModule<F>& operator[](std::size_t i) const { return modules.at(i); }
  std::size_t size() const { return modules.size(); }
};

/// Ext^i(M, T) from the minimal resolution of M.
template <FieldScalar F>
ExtTorTable<F> ext_table(const FreeResolution<F>& res, const ModulePresentation<F>& target, int up_to) {
  if (!same_ring(res.f0().ring(), target.ring())) throw RingError("Ext arguments over different rings");
  const auto& rel = target.relations();
  const std::size_t g = rel.rows();
  std::vector<detail::CokernelTerm<F>> terms;
  for (int j = 0; j <= up_to + 1; ++j) {
    std::vector<int> shifts;
    const FreeModule<F> fj = res.module(static_cast<std::size_t>(j));
    for (int d : fj.degrees()) shifts.push_back(-d);
    terms.push_back(detail::block_term(rel, shifts));
  }
  // Hom(d_{j+1}, T): Hom(F_j, T) -> Hom(F_{j+1}, T)
  std::vector<Matrix<F>> maps;
  for (int j = 0; j <= up_to; ++j) {
    std::size_t rj = res.rank(static_cast<std::size_t>(j)), rj1 = res.rank(static_cast<std::size_t>(j) + 1);
    std::vector<std::vector<Polynomial<F>>> e(rj1, std::vector<Polynomial<F>>(rj));
    if (static_cast<std::size_t>(j) < res.length()) {
      auto d = detail::entries_of(res.maps()[static_cast<std::size_t>(j)]);
      e = detail::transposed(d, rj, rj1);
    }
    maps.push_back(detail::block_map(terms[static_cast<std::size_t>(j)], terms[static_cast<std::size_t>(j) + 1], g, e));
  }
  ExtTorTable<F> table;
  for (int j = 0; j <= up_to; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const Matrix<F>* alpha = j > 0 ? &maps[uj - 1] : nullptr;
    table.modules.push_back(detail::homology(terms[uj], alpha, &maps[uj], &terms[uj + 1]));
  }
  return table;
}

template <FieldScalar F>
ExtTorTable<F> ext_table(const ModulePresentation<F>& m, const ModulePresentation<F>& target, int up_to) {
  return ext_table(minimal_free_resolution(m), target, up_to);
}

/// Tor_i(M, T) = H_i(F ⊗ T).
template <FieldScalar F>
ExtTorTable<F> tor_table(const FreeResolution<F>& res, const ModulePresentation<F>& target, int up_to) {
  if (!same_ring(res.f0().ring(), target.ring())) throw RingError("Tor arguments over different rings");
  const auto& rel = target.relations();
  const std::size_t g = rel.rows();
  std::vector<detail::CokernelTerm<F>> terms;
  for (int j = 0; j <= up_to + 1; ++j)
    terms.push_back(detail::block_term(rel, res.module(static_cast<std::size_t>(j)).degrees()));
  // d_j ⊗ T: F_j ⊗ T -> F_{j-1} ⊗ T, stored at index j - 1.
  std::vector<Matrix<F>> maps;
  for (int j = 1; j <= up_to + 1; ++j) {
    std::size_t rj = res.rank(static_cast<std::size_t>(j)), rprev = res.rank(static_cast<std::size_t>(j) - 1);
    std::vector<std::vector<Polynomial<F>>> e(rprev, std::vector<Polynomial<F>>(rj));
    if (static_cast<std::size_t>(j) <= res.length()) e = detail::entries_of(res.maps()[static_cast<std::size_t>(j) - 1]);
    maps.push_back(detail::block_map(terms[static_cast<std::size_t>(j)], terms[static_cast<std::size_t>(j) - 1], g, e));
  }
  ExtTorTable<F> table;
  for (int j = 0; j <= up_to; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    const Matrix<F>* outgoing = j > 0 ? &maps[uj - 1] : nullptr;
    const detail::CokernelTerm<F>* next = j > 0 ? &terms[uj - 1] : nullptr;
    table.modules.push_back(detail::homology(terms[uj], &maps[uj], outgoing, next));
  }
  return table;
}

template <FieldScalar F>
ExtTorTable<F> tor_table(const ModulePresentation<F>& m, const ModulePresentation<F>& target, int up_to) {
  return tor_table(minimal_free_resolution(m), target, up_to);
}

}  // namespace tlc

#endif  // TLC_HOMOLOGICAL_HPP
