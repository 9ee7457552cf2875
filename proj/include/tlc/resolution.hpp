#ifndef TLC_RESOLUTION_HPP
#define TLC_RESOLUTION_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tlc/extended_int.hpp"
#include "tlc/presentation.hpp"

namespace tlc {

/// Graded free resolution 0 <- F_0 <- F_1 <- ... <- F_l <- 0 of a module.
template <FieldScalar F>
class FreeResolution {
 public:
  FreeResolution() = default;
  FreeResolution(FreeModule<F> f0, std::vector<Matrix<F>> maps)
      : f0_(std::move(f0)), maps_(std::move(maps)) {}

  const FreeModule<F>& f0() const { return f0_; }
  /// maps()[i] is d_{i+1}: F_{i+1} -> F_i.
  const std::vector<Matrix<F>>& maps() const { return maps_; }
  std::size_t length() const { return maps_.size(); }
  bool is_empty() const { return f0_.rank() == 0; }

  FreeModule<F> module(std::size_t i) const {
    if (i == 0) return f0_;
    if (i > maps_.size()) return FreeModule<F>(f0_.ring(), {});
    return maps_[i - 1].source();
  }
  std::size_t rank(std::size_t i) const { return module(i).rank(); }
  std::vector<std::size_t> ranks() const {
    std::vector<std::size_t> r;
    if (is_empty()) return r;
    for (std::size_t i = 0; i <= length(); ++i) r.push_back(rank(i));
    return r;
  }

  bool is_minimal() const {
    for (const auto& m : maps_)
      if (!m.is_minimal()) return false;
    return true;
  }

  /// pd; -inf for the zero module.
  ExtendedInt projective_dimension() const {
    if (is_empty()) return ExtendedInt::minus_infinity();
    return static_cast<long>(length());
  }

  /// Graded Betti numbers: (homological index, degree) -> count.
  std::map<std::pair<int, int>, int> betti_table() const {
    std::map<std::pair<int, int>, int> t;
    for (std::size_t i = 0; i <= length() && !is_empty(); ++i) {
      const FreeModule<F> fi = module(i);
      for (int d : fi.degrees()) ++t[{static_cast<int>(i), d}];
    }
    return t;
  }

  std::string betti_string() const {
    std::string s;
    for (const auto& [k, v] : betti_table()) {
      if (!s.empty()) s += ' ';
      s += "b" + std::to_string(k.first) + "," + std::to_string(k.second) + "=" + std::to_string(v);
    }
    return s.empty() ? "0" : s;
  }

 private:
  FreeModule<F> f0_;
  std::vector<Matrix<F>> maps_;
};

namespace detail {

/// Removes generators of F0 that are killed by a relation with a unit entry.
template <FieldScalar F>
Matrix<F> prune_presentation(const Matrix<F>& rel) {
  std::vector<int> degs = rel.target().degrees();
  std::vector<FreeModuleElement<F>> cols;
  for (const auto& c : rel.columns())
    if (!c.is_zero()) cols.push_back(c);
  const auto& ring = rel.ring();
  for (;;) {
    std::size_t col = cols.size();
    int row = -1;
    F unit;
    for (std::size_t j = 0; j < cols.size() && row < 0; ++j)
      for (const auto& t : cols[j].terms())
        if (t.mono.is_one()) {
          col = j;
          row = t.comp;
          unit = t.coeff;
          break;
        }
    if (row < 0) break;
    const FreeModuleElement<F> pivot = cols[col].scaled(unit.inverse());
    std::vector<FreeModuleElement<F>> next;
    std::vector<int> remap(degs.size());
    for (std::size_t r = 0, k = 0; r < degs.size(); ++r) remap[r] = static_cast<int>(r) == row ? -1 : static_cast<int>(k++);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == col) continue;
      Polynomial<F> p = cols[j].component(row, ring);
      FreeModuleElement<F> c = p.is_zero() ? cols[j] : cols[j] - pivot.times(p);
      if (c.is_zero()) continue;
      std::vector<typename FreeModuleElement<F>::Term> ts;
      for (const auto& t : c.terms()) ts.push_back({remap[static_cast<std::size_t>(t.comp)], t.mono, t.coeff});
      next.emplace_back(std::move(ts));
    }
    degs.erase(degs.begin() + row);
    cols = std::move(next);
  }
  return Matrix<F>::from_columns(FreeModule<F>(ring, degs), cols);
}

}  // namespace detail

/// Minimal graded free resolution by iterated minimal syzygies.
template <FieldScalar F>
FreeResolution<F> minimal_free_resolution(const ModulePresentation<F>& m) {
  Matrix<F> rel = detail::prune_presentation(m.relations());
  const FreeModule<F> f0 = rel.target();
  std::vector<Matrix<F>> maps;
  if (f0.rank() == 0) return FreeResolution<F>(f0, {});
  auto d1 = minimal_generators(f0, rel.columns());
  if (d1.empty()) return FreeResolution<F>(f0, {});
  maps.push_back(Matrix<F>::from_columns(f0, d1));
  for (;;) {
    auto syz = syzygies(maps.back());
    if (syz.empty()) break;
    maps.push_back(Matrix<F>::from_columns(maps.back().source(), syz));
  }
  return FreeResolution<F>(f0, std::move(maps));
}

/// The presentation with redundant generators and relations removed.
template <FieldScalar F>
ModulePresentation<F> minimal_presentation(const ModulePresentation<F>& m) {
  Matrix<F> rel = detail::prune_presentation(m.relations());
  auto cols = minimal_generators(rel.target(), rel.columns());
  return ModulePresentation<F>(Matrix<F>::from_columns(rel.target(), cols));
}

}  // namespace tlc

#endif  // TLC_RESOLUTION_HPP
