#ifndef TLC_TESTS_SUPPORT_HPP
#define TLC_TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "tlc/tlc.hpp"

namespace tlc::test {

using Q = Rational;
using Poly = Polynomial<Q>;

inline RingPtr<Q> ring(std::size_t n, const std::string& stem = "x") {
  return make_ring<Q>({}, harness::variable_names(stem, n));
}

inline Poly var(const RingPtr<Q>& r, std::size_t i) { return Poly::variable(r, i); }
inline Poly cst(const RingPtr<Q>& r, long c) { return Poly::constant(r, Q(c)); }

inline Monomial mono(std::vector<int> e) {
  Monomial m;
  for (std::size_t i = 0; i < e.size(); ++i) m.set(i, e[i]);
  return m;
}

inline MonomialIdeal mideal(std::size_t n, const std::vector<std::vector<int>>& gens) {
  return harness::parse_monomials(n, gens);
}

inline ModulePresentation<Q> quotient(const RingPtr<Q>& r, const MonomialIdeal& j) {
  return ModulePresentation<Q>::cyclic(r, j.generators());
}

/// L = k[x1,x2]/(x1^2, x1x2).
inline MonomialIdeal lp_ideal() { return mideal(2, {{2, 0}, {1, 1}}); }
/// N = k[y1,y2]/(y1).
inline MonomialIdeal np_ideal() { return mideal(2, {{1, 0}}); }

/// Number of monomials of total degree d in n variables outside J.
inline long standard_monomials(const MonomialIdeal& j, std::size_t n, int d) {
  long count = 0;
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
    if (v + 1 == n) {
      e[v] = left;
      Monomial m;
      for (std::size_t k = 0; k < n; ++k) m.set(k, e[k]);
      if (!j.contains(m)) ++count;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      e[v] = a;
      rec(v + 1, left - a);
    }
  };
  if (n == 0) return d == 0 && !j.is_unit() ? 1 : 0;
  rec(0, d);
  return count;
}

/// All monomials with every exponent at most `bound`.
inline std::vector<Monomial> box_monomials(std::size_t n, int bound) {
  std::vector<Monomial> out;
  std::vector<int> e(n, 0);
  for (;;) {
    Monomial m;
    for (std::size_t k = 0; k < n; ++k) m.set(k, e[k]);
    out.push_back(m);
    std::size_t k = 0;
    while (k < n && e[k] == bound) e[k++] = 0;
    if (k == n) return out;
    ++e[k];
  }
}

}  // namespace tlc::test

#endif  // TLC_TESTS_SUPPORT_HPP
