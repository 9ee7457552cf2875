#ifndef TLC_FILTRATION_HPP
#define TLC_FILTRATION_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tlc/cech.hpp"

namespace tlc {

/// One step D_k = K_k / J of a filtration of R/J.
struct FiltrationStep {
  MonomialIdeal ideal;
  ExtendedInt cd;
};

/// 0 = D_0 ⊂ D_1 ⊂ ... ⊂ D_r = R/J. steps[k-1] holds D_k; D_0 is J/J.
struct MonomialFiltration {
  MonomialIdeal base;
  std::vector<FiltrationStep> steps;

  std::size_t length() const { return steps.size(); }
  const MonomialIdeal& ideal(std::size_t k) const { return k == 0 ? base : steps.at(k - 1).ideal; }

  /// Chains compare by their defining ideals.
  bool same_chain(const MonomialFiltration& o) const {
    if (!(base == o.base) || steps.size() != o.steps.size()) return false;
    for (std::size_t k = 0; k < steps.size(); ++k)
      if (!(steps[k].ideal == o.steps[k].ideal)) return false;
    return true;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    std::string s = "0";
    for (const auto& st : steps) s += " < " + st.ideal.to_string(names) + "/J [cd " + st.cd.to_string() + "]";
    return s;
  }
};

/// cd(I, R/p) for each associated prime p of R/J.
template <FieldScalar F = Rational>
std::map<VarSet, ExtendedInt> prime_cds(const MonomialIdeal& i, const std::vector<VarSet>& primes,
                                        FieldSpec field = {}) {
  std::map<VarSet, ExtendedInt> out;
  for (VarSet p : primes)
    out[p] = grade_cd_monomial<F>(i, MonomialIdeal::prime(i.nvars(), p), field).second;
  return out;
}

/// Dimension filtration of R/J with respect to I. D_{k-1} is the largest
/// submodule of cd below cd(D_k): the intersection of the primary components
/// of J whose prime has cd above that value, divided by J.
template <FieldScalar F = Rational>
MonomialFiltration dimension_filtration(const MonomialIdeal& i, const MonomialIdeal& j, FieldSpec field = {}) {
  if (j.is_unit()) throw std::invalid_argument("filtration of the zero module");
  if (i.nvars() != j.nvars()) throw std::invalid_argument("ideals over different rings");
  const auto comps = primary_decomposition_monomial(j);
  std::vector<VarSet> primes;
  for (const auto& c : comps) primes.push_back(c.prime);
  const auto cds = prime_cds<F>(i, primes, field);
  std::vector<ExtendedInt> values;
  for (const auto& [p, c] : cds) values.push_back(c);
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  MonomialFiltration f{j, {}};
  for (const auto& c : values) {
    MonomialIdeal k = MonomialIdeal::unit(j.nvars());
    for (const auto& q : comps)
      if (cds.at(q.prime) > c) k = intersection(k, q.ideal);
    f.steps.push_back({k, c});
  }
  return f;
}

struct SeqCmVerdict {
  bool sequentially_cm = false;
  MonomialFiltration filtration;
  /// Per quotient D_k / D_{k-1}: (grade, cd) with respect to I.
  std::vector<std::pair<ExtendedInt, ExtendedInt>> quotients;
};

/// R/J is sequentially CM with respect to I iff every quotient of its
/// dimension filtration has grade = cd >= 0.
template <FieldScalar F = Rational>
SeqCmVerdict is_seqCM_wrt(const MonomialIdeal& i, const MonomialIdeal& j, FieldSpec field = {}) {
  SeqCmVerdict v;
  if (j.is_unit()) {
    v.sequentially_cm = true;
    v.filtration = {j, {}};
    return v;
  }
  v.filtration = dimension_filtration<F>(i, j, field);
  v.sequentially_cm = true;
  for (std::size_t k = 1; k <= v.filtration.length(); ++k) {
    auto gc = grade_cd_monomial<F>(i, v.filtration.ideal(k), v.filtration.ideal(k - 1), field);
    v.quotients.push_back(gc);
    if (!(gc.first == gc.second) || gc.second < ExtendedInt(0)) v.sequentially_cm = false;
  }
  return v;
}

}  // namespace tlc

#endif  // TLC_FILTRATION_HPP
