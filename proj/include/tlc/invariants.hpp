#ifndef TLC_INVARIANTS_HPP
#define TLC_INVARIANTS_HPP

#include <string>
#include <vector>

#include "tlc/homological.hpp"

namespace tlc {

/// Pole order of the Hilbert series; -inf for the zero module.
template <FieldScalar F>
ExtendedInt krull_dim(const ModulePresentation<F>& m) {
  return m.hilbert_series().pole_order();
}

/// Auslander–Buchsbaum: depth = n - pd; +inf for the zero module.
template <FieldScalar F>
ExtendedInt depth_m(const FreeResolution<F>& res) {
  if (res.is_empty()) return ExtendedInt::plus_infinity();
  return static_cast<long>(res.f0().ring()->nvars()) - static_cast<long>(res.length());
}

template <FieldScalar F>
ExtendedInt depth_m(const ModulePresentation<F>& m) {
  return depth_m(minimal_free_resolution(m));
}

/// Least i with Ext^i(R/I, M) != 0; +inf when IM = M.
template <FieldScalar F>
ExtendedInt grade_via_ext(const std::vector<Polynomial<F>>& ideal, const ModulePresentation<F>& m) {
  if (m.is_zero()) return ExtendedInt::plus_infinity();
  auto quotient = ModulePresentation<F>::cyclic(m.ring(), ideal);
  auto res = minimal_free_resolution(quotient);
  if (res.is_empty()) return ExtendedInt::plus_infinity();
  auto table = ext_table(res, m, static_cast<int>(res.length()));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (!table[i].is_zero()) return static_cast<long>(i);
  return ExtendedInt::plus_infinity();
}

template <FieldScalar F>
std::vector<Polynomial<F>> irrelevant_ideal(const RingPtr<F>& ring) {
  std::vector<Polynomial<F>> gens;
  for (std::size_t i = 0; i < ring->nvars(); ++i) gens.push_back(Polynomial<F>::variable(ring, i));
  return gens;
}

/// Local-duality data of M at the irrelevant ideal: the modules
/// Ext^j(M, R) for j = 0..n, from which every invariant at m is read off.
template <FieldScalar F>
class DualityProfile {
 public:
  explicit DualityProfile(const ModulePresentation<F>& m)
      : n_(static_cast<int>(m.ring()->nvars())), resolution_(minimal_free_resolution(m)) {
    if (!resolution_.is_empty()) {
      auto r = ModulePresentation<F>::free(m.ring(), {0});
      ext_ = ext_table(resolution_, r, n_);
    }
    for (int j = 0; j <= n_; ++j) dims_.push_back(is_zero_module() ? ExtendedInt::minus_infinity() : ext_[static_cast<std::size_t>(j)].krull_dim());
  }

  int nvars() const { return n_; }
  bool is_zero_module() const { return resolution_.is_empty(); }
  const FreeResolution<F>& resolution() const { return resolution_; }
  const ExtTorTable<F>& ext() const { return ext_; }
  /// Krull dimension of Ext^j(M, R).
  const std::vector<ExtendedInt>& ext_dims() const { return dims_; }

  ExtendedInt depth() const { return depth_m(resolution_); }
  ExtendedInt dim() const {
    if (is_zero_module()) return ExtendedInt::minus_infinity();
    for (int i = n_; i >= 0; --i)
      if (!ext_[static_cast<std::size_t>(n_ - i)].is_zero()) return i;
    return ExtendedInt::minus_infinity();
  }
  /// H^i_m(M) is finitely generated iff dim Ext^{n-i}(M, R) <= 0.
  ExtendedInt finiteness_dim() const {
    if (is_zero_module()) return ExtendedInt::plus_infinity();
    for (int i = 0; i <= n_; ++i)
      if (dims_[static_cast<std::size_t>(n_ - i)] >= ExtendedInt(1)) return i;
    return ExtendedInt::plus_infinity();
  }

 private:
  int n_;
  FreeResolution<F> resolution_;
  ExtTorTable<F> ext_;
  std::vector<ExtendedInt> dims_;
};

/// Least i with H^i_m(M) not finitely generated, by graded local duality.
template <FieldScalar F>
ExtendedInt finiteness_dim_m(const ModulePresentation<F>& m) {
  return DualityProfile<F>(m).finiteness_dim();
}

enum class CmKind { cohen_macaulay, generalized_not_cm, sequential_not_generalized, none };

inline std::string to_string(CmKind k) {
  switch (k) {
    case CmKind::cohen_macaulay: return "CM";
    case CmKind::generalized_not_cm: return "generalized-CM-not-CM";
    case CmKind::sequential_not_generalized: return "seq-CM-not-genCM";
    default: return "none";
  }
}

/// Classification at the irrelevant ideal with witness data. `kind` is the
/// first of CM, generalized CM, sequentially CM that holds; the flags record
/// every property independently (a module can be both generalized and
/// sequentially CM).
struct CmClassification {
  CmKind kind = CmKind::none;
  bool cohen_macaulay = false;
  bool generalized_cm = false;
  bool sequentially_cm = false;
  ExtendedInt depth, dim, finiteness;
  /// Per j: Krull dimension and depth of Ext^j(M, R).
  std::vector<ExtendedInt> ext_dims, ext_depths;

  /// Comma-separated list of the properties that hold, finest first.
  std::string label() const {
    if (cohen_macaulay) return "CM";
    std::string s;
    if (generalized_cm) s = "generalized-CM";
    if (sequentially_cm) s += s.empty() ? "seq-CM" : ", seq-CM";
    return s.empty() ? "none" : s;
  }
};

template <FieldScalar F>
CmClassification cm_class_m(const DualityProfile<F>& p) {
  CmClassification c;
  c.depth = p.depth();
  c.dim = p.dim();
  c.finiteness = p.finiteness_dim();
  c.ext_dims = p.ext_dims();
  if (p.is_zero_module()) {
    c.cohen_macaulay = c.generalized_cm = c.sequentially_cm = true;
    c.kind = CmKind::cohen_macaulay;
    c.ext_depths.assign(c.ext_dims.size(), ExtendedInt::plus_infinity());
    return c;
  }
  c.cohen_macaulay = c.depth == c.dim;
  c.generalized_cm = c.dim <= ExtendedInt(0) || c.finiteness == c.dim;
  // Ext^{n-i}(M, R) must vanish or be CM of dimension i.
  const int n = p.nvars();
  c.sequentially_cm = true;
  for (int j = 0; j <= n; ++j) {
    const auto& e = p.ext()[static_cast<std::size_t>(j)];
    if (e.is_zero()) {
      c.ext_depths.push_back(ExtendedInt::plus_infinity());
      continue;
    }
    ExtendedInt d = depth_m(e.presentation());
    c.ext_depths.push_back(d);
    if (!(e.krull_dim() == ExtendedInt(n - j) && d == ExtendedInt(n - j))) c.sequentially_cm = false;
  }
  if (c.cohen_macaulay) c.kind = CmKind::cohen_macaulay;
  else if (c.generalized_cm) c.kind = CmKind::generalized_not_cm;
  else if (c.sequentially_cm) c.kind = CmKind::sequential_not_generalized;
  return c;
}

template <FieldScalar F>
CmClassification cm_class_m(const ModulePresentation<F>& m) {
  return cm_class_m(DualityProfile<F>(m));
}

}  // namespace tlc

#endif  // TLC_INVARIANTS_HPP
