#include <gtest/gtest.h>

#include "support.hpp"

using namespace tlc;
using namespace tlc::test;

namespace {

using Pres = ModulePresentation<Q>;

struct Rings {
  RingPtr<Q> r = ring(2);
  Pres lp = quotient(r, lp_ideal());
  Pres k = quotient(r, MonomialIdeal::maximal(2));
  Pres free = Pres::free(r, {0});
  Pres zero = quotient(r, MonomialIdeal::unit(2));
};

/// Vector-space dimension of a finite-length module from its series.
std::int64_t length_of(const HilbertSeries& h) {
  auto [p, d] = h.reduced();
  EXPECT_EQ(d, 0);
  return p.at_one();
}

HilbertSeries series_from_betti(const FreeResolution<Q>& res, std::size_t n) {
  LaurentPolynomial num;
  for (const auto& [key, count] : res.betti_table()) {
    auto term = LaurentPolynomial::monomial(key.second, count);
    num = key.first % 2 ? num - term : num + term;
  }
  return HilbertSeries(num, static_cast<int>(n));
}

MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> e(0, 2), k(1, 4);
  std::vector<Monomial> g;
  for (int t = k(rng); t > 0; --t) {
    Monomial m;
    for (std::size_t j = 0; j < n; ++j) m.set(j, e(rng));
    if (m.is_one()) m.set(0, 1);
    g.push_back(m);
  }
  return MonomialIdeal(n, g);
}

}  // namespace

TEST(Resolution, ResidueFieldIsKoszul) {
  Rings s;
  auto res = minimal_free_resolution(s.k);
  EXPECT_EQ(res.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_TRUE(res.is_minimal());
}

TEST(Resolution, LpRanksAndTwists) {
  Rings s;
  auto res = minimal_free_resolution(s.lp);
  EXPECT_EQ(res.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(res.module(0).degrees(), (std::vector<int>{0}));
  EXPECT_EQ(res.module(1).degrees(), (std::vector<int>{2, 2}));
  EXPECT_EQ(res.module(2).degrees(), (std::vector<int>{3}));
  EXPECT_EQ(res.projective_dimension(), ExtendedInt(2));
  EXPECT_EQ(res.betti_string(), "b0,0=1 b1,2=2 b2,3=1");
}

TEST(Resolution, FreeModuleHasLengthZero) {
  Rings s;
  auto res = minimal_free_resolution(s.free);
  EXPECT_EQ(res.length(), 0u);
  EXPECT_EQ(res.projective_dimension(), ExtendedInt(0));
}

TEST(Resolution, ZeroModuleIsEmpty) {
  Rings s;
  EXPECT_TRUE(s.zero.is_zero());
  auto res = minimal_free_resolution(s.zero);
  EXPECT_TRUE(res.is_empty());
  EXPECT_EQ(res.projective_dimension(), ExtendedInt::minus_infinity());
}

TEST(HilbertSeries, PolynomialRing) {
  Rings s;
  EXPECT_EQ(hilbert_series(s.free), HilbertSeries(LaurentPolynomial::one(), 2));
}

TEST(HilbertSeries, LpClosedForm) {
  Rings s;
  auto num = LaurentPolynomial::one() + LaurentPolynomial::monomial(1) - LaurentPolynomial::monomial(2);
  auto h = hilbert_series(s.lp);
  EXPECT_EQ(h, HilbertSeries(num, 1));
  EXPECT_EQ(h.pole_order(), ExtendedInt(1));
  for (int d = 0; d < 12; ++d) EXPECT_EQ(h.coefficient(d), standard_monomials(lp_ideal(), 2, d)) << d;
}

TEST(HilbertSeries, ResidueField) {
  Rings s;
  EXPECT_EQ(hilbert_series(s.k), HilbertSeries(LaurentPolynomial::one(), 0));
}

TEST(HilbertSeries, MonomialFormulaMatchesCounting) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    auto j = random_monomial_ideal(rng, 3);
    auto h = monomial_quotient_series(j.generators(), 3);
    for (int d = 0; d < 8; ++d) EXPECT_EQ(h.coefficient(d), standard_monomials(j, 3, d));
  }
}

TEST(Invariants, Lp) {
  Rings s;
  DualityProfile<Q> p(s.lp);
  EXPECT_EQ(p.depth(), ExtendedInt(0));
  EXPECT_EQ(p.dim(), ExtendedInt(1));
  EXPECT_EQ(p.finiteness_dim(), ExtendedInt(1));
  auto c = cm_class_m(p);
  EXPECT_FALSE(c.cohen_macaulay);
  EXPECT_TRUE(c.generalized_cm);
  EXPECT_TRUE(c.sequentially_cm);
}

TEST(Invariants, PolynomialRingIsCM) {
  Rings s;
  auto c = cm_class_m(s.free);
  EXPECT_EQ(c.depth, ExtendedInt(2));
  EXPECT_EQ(c.dim, ExtendedInt(2));
  EXPECT_EQ(c.finiteness, ExtendedInt(2));
  EXPECT_EQ(c.kind, CmKind::cohen_macaulay);
  EXPECT_EQ(c.label(), "CM");
}

TEST(Invariants, ResidueFieldIsCMOfDimensionZero) {
  Rings s;
  auto c = cm_class_m(s.k);
  EXPECT_EQ(c.depth, ExtendedInt(0));
  EXPECT_EQ(c.dim, ExtendedInt(0));
  EXPECT_TRUE(c.cohen_macaulay);
}

TEST(Invariants, TwoLinesNotCM) {
  // R/(x1x2, x1x3): a plane and a line, sequentially CM but not CM.
  auto r = ring(3);
  auto c = cm_class_m(quotient(r, mideal(3, {{1, 1, 0}, {1, 0, 1}})));
  EXPECT_EQ(c.dim, ExtendedInt(2));
  EXPECT_EQ(c.depth, ExtendedInt(1));
  EXPECT_FALSE(c.cohen_macaulay);
  EXPECT_TRUE(c.sequentially_cm);
}

TEST(Invariants, ZeroModuleConventions) {
  Rings s;
  auto c = cm_class_m(s.zero);
  EXPECT_EQ(c.depth, ExtendedInt::plus_infinity());
  EXPECT_EQ(c.dim, ExtendedInt::minus_infinity());
  EXPECT_EQ(c.finiteness, ExtendedInt::plus_infinity());
  EXPECT_EQ(krull_dim(s.zero), ExtendedInt::minus_infinity());
}

TEST(Grade, ViaExt) {
  Rings s;
  auto x1 = var(s.r, 0);
  EXPECT_EQ(grade_via_ext<Q>({x1}, s.free), ExtendedInt(1));
  EXPECT_EQ(grade_via_ext(irrelevant_ideal(s.r), s.free), ExtendedInt(2));
  EXPECT_EQ(grade_via_ext(irrelevant_ideal(s.r), s.lp), ExtendedInt(0));
  EXPECT_EQ(grade_via_ext<Q>({cst(s.r, 1)}, s.lp), ExtendedInt::plus_infinity());
}

TEST(Ext, TopExtOfResidueFieldIsOneDimensional) {
  Rings s;
  auto t = ext_table(s.k, s.free, 2);
  EXPECT_TRUE(t[0].is_zero());
  EXPECT_TRUE(t[1].is_zero());
  EXPECT_EQ(length_of(t[2].hilbert_series()), 1);
}

TEST(Ext, HomOfRingIsRing) {
  Rings s;
  auto t = ext_table(s.free, s.free, 2);
  EXPECT_EQ(t[0].hilbert_series(), HilbertSeries(LaurentPolynomial::one(), 2));
  EXPECT_TRUE(t[1].is_zero());
}

TEST(Ext, FirstExtOfLpHasDimensionOne) {
  Rings s;
  auto t = ext_table(s.lp, s.free, 2);
  EXPECT_EQ(t[1].krull_dim(), ExtendedInt(1));
  EXPECT_EQ(t[2].krull_dim(), ExtendedInt(0));
}

TEST(Tor, ResidueFieldWithItself) {
  Rings s;
  auto t = tor_table(s.k, s.k, 2);
  EXPECT_EQ(length_of(t[0].hilbert_series()), 1);
  EXPECT_EQ(length_of(t[1].hilbert_series()), 2);
  EXPECT_EQ(length_of(t[2].hilbert_series()), 1);
}

TEST(Tor, LpWithResidueFieldGivesBetti) {
  Rings s;
  auto t = tor_table(s.lp, s.k, 2);
  EXPECT_EQ(t[1].hilbert_series(), HilbertSeries(LaurentPolynomial::monomial(2, 2), 0));
  EXPECT_EQ(t[2].hilbert_series(), HilbertSeries(LaurentPolynomial::monomial(3), 0));
}

TEST(Tor, ZeroOfFreeIsTensor) {
  Rings s;
  auto t = tor_table(s.free, s.lp, 1);
  EXPECT_EQ(t[0].hilbert_series(), hilbert_series(s.lp));
  EXPECT_TRUE(t[1].is_zero());
}

TEST(ResolutionProperties, RandomMonomialQuotients) {
  std::mt19937_64 rng(31);
  auto r = ring(3);
  for (int t = 0; t < 30; ++t) {
    auto j = random_monomial_ideal(rng, 3);
    auto m = quotient(r, j);
    auto res = minimal_free_resolution(m);
    ASSERT_FALSE(res.is_empty());
    EXPECT_TRUE(res.is_minimal());
    for (std::size_t i = 0; i + 1 < res.maps().size(); ++i)
      EXPECT_TRUE(res.maps()[i].compose(res.maps()[i + 1]).is_zero());
    // Alternating sum of Betti numbers reproduces the Hilbert series.
    EXPECT_EQ(series_from_betti(res, 3), hilbert_series(m));
    EXPECT_LE(res.length(), 3u);

    DualityProfile<Q> p(m);
    EXPECT_LE(p.finiteness_dim(), p.dim());
    EXPECT_LE(p.depth(), p.dim());
    EXPECT_LE(p.depth(), p.finiteness_dim());
    EXPECT_EQ(grade_via_ext(irrelevant_ideal(r), m), p.depth());
  }
}

TEST(ResolutionProperties, RandomBinomialQuotients) {
  std::mt19937_64 rng(32);
  auto r = ring(3);
  std::uniform_int_distribution<std::size_t> v(0, 2);
  for (int t = 0; t < 15; ++t) {
    std::vector<Poly> gens;
    for (int k = 0; k < 2; ++k) {
      Poly a = var(r, v(rng)) * var(r, v(rng)), b = var(r, v(rng)) * var(r, v(rng));
      if (!(a - b).is_zero()) gens.push_back(a - b);
    }
    if (gens.empty()) continue;
    auto m = Pres::cyclic(r, gens);
    auto res = minimal_free_resolution(m);
    EXPECT_TRUE(res.is_minimal());
    for (std::size_t i = 0; i + 1 < res.maps().size(); ++i)
      EXPECT_TRUE(res.maps()[i].compose(res.maps()[i + 1]).is_zero());
    EXPECT_EQ(series_from_betti(res, 3), hilbert_series(m));
  }
}

TEST(Presentation, MinimalPresentationDropsUnitRelations) {
  auto r = ring(2);
  auto x1 = var(r, 0), x2 = var(r, 1);
  // The unit entry kills the second generator, leaving R/(x1^2).
  auto rel = Matrix<Q>::from_rows(r, {0, 1}, {{cst(r, 0), x1 * x1}, {cst(r, 1), x2}});
  Pres m(rel);
  auto p = minimal_presentation(m);
  EXPECT_EQ(p.num_generators(), 1u);
  EXPECT_EQ(hilbert_series(p), hilbert_series(m));
  EXPECT_EQ(hilbert_series(p), hilbert_series(Pres::cyclic(r, {x1 * x1})));
}
