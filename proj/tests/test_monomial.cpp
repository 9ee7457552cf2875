#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace tlc;
using namespace tlc::test;

namespace {

MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, int max_exp, int max_gens) {
  std::uniform_int_distribution<int> e(0, max_exp), k(1, max_gens);
  std::vector<Monomial> g;
  for (int t = k(rng); t > 0; --t) {
    Monomial m;
    for (std::size_t j = 0; j < n; ++j) m.set(j, e(rng));
    if (m.is_one()) m.set(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng), 1);
    g.push_back(m);
  }
  return MonomialIdeal(n, g);
}

/// Membership in J agrees with membership in every component, on a box of monomials.
void expect_decomposes(const MonomialIdeal& j, const std::vector<PrimaryComponent>& comps, int bound) {
  for (const auto& m : box_monomials(j.nvars(), bound)) {
    bool all = std::all_of(comps.begin(), comps.end(), [&](const auto& c) { return c.ideal.contains(m); });
    EXPECT_EQ(j.contains(m), all) << Multidegree(std::vector<int>(m.exponents().begin(), m.exponents().begin() + j.nvars())).to_string();
  }
}

std::set<VarSet> as_set(const std::vector<VarSet>& v) { return {v.begin(), v.end()}; }

constexpr VarSet kX1 = 1, kX2 = 2, kX3 = 4;

}  // namespace

TEST(PrimaryDecomposition, LpSplitsIntoTwo) {
  auto j = lp_ideal();
  auto comps = primary_decomposition_monomial(j);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].ideal, mideal(2, {{1, 0}}));
  EXPECT_EQ(comps[0].dim, 1);
  EXPECT_EQ(comps[1].ideal, mideal(2, {{2, 0}, {0, 1}}));
  EXPECT_EQ(comps[1].dim, 0);
  expect_decomposes(j, comps, 4);
}

TEST(PrimaryDecomposition, SquarefreePrincipal) {
  auto comps = primary_decomposition_monomial(mideal(2, {{1, 1}}));
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].ideal, mideal(2, {{1, 0}}));
  EXPECT_EQ(comps[1].ideal, mideal(2, {{0, 1}}));
}

TEST(PrimaryDecomposition, MaximalIdealIsPrimary) {
  auto comps = primary_decomposition_monomial(MonomialIdeal::maximal(2));
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].ideal, MonomialIdeal::maximal(2));
  EXPECT_EQ(comps[0].prime, kX1 | kX2);
}

TEST(PrimaryDecomposition, UnitRejected) {
  EXPECT_THROW(primary_decomposition_monomial(MonomialIdeal::unit(2)), std::invalid_argument);
}

TEST(PrimaryDecomposition, RandomIdealsIntersectBack) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    auto j = random_ideal(rng, 3, 3, 4);
    auto comps = primary_decomposition_monomial(j);
    MonomialIdeal meet = MonomialIdeal::unit(3);
    for (const auto& c : comps) {
      meet = intersection(meet, c.ideal);
      EXPECT_EQ(c.ideal.radical(), MonomialIdeal::prime(3, c.prime));
    }
    EXPECT_EQ(meet, j);
    // Irredundant: dropping any component enlarges the intersection.
    for (std::size_t drop = 0; drop < comps.size() && comps.size() > 1; ++drop) {
      MonomialIdeal rest = MonomialIdeal::unit(3);
      for (std::size_t c = 0; c < comps.size(); ++c)
        if (c != drop) rest = intersection(rest, comps[c].ideal);
      EXPECT_FALSE(j.contains(rest));
    }
  }
}

TEST(AssociatedPrimes, Examples) {
  EXPECT_EQ(associated_primes(lp_ideal()), (std::vector<VarSet>{kX1, kX1 | kX2}));
  EXPECT_EQ(associated_primes(mideal(2, {{1, 1}})), (std::vector<VarSet>{kX1, kX2}));
  EXPECT_EQ(associated_primes(MonomialIdeal::zero(2)), (std::vector<VarSet>{0}));
  EXPECT_TRUE(associated_primes(MonomialIdeal::unit(2)).empty());
}

TEST(AssociatedPrimes, ExtDetectsEmbeddedPrime) {
  // m is associated to Lp exactly when depth is 0.
  auto r = ring(2);
  EXPECT_EQ(depth_m(quotient(r, lp_ideal())), ExtendedInt(0));
  EXPECT_EQ(depth_m(quotient(r, mideal(2, {{1, 1}}))), ExtendedInt(1));
}

TEST(Cech, TopCohomologyOfRing) {
  CechCohomology<Q> c(MonomialIdeal::maximal(2), MonomialIdeal::zero(2), {});
  EXPECT_EQ(c.piece(2, Multidegree(std::vector<int>{-1, -1})), 1);
  EXPECT_EQ(c.piece(2, Multidegree(std::vector<int>{0, -1})), 0);
  EXPECT_EQ(c.piece(0, Multidegree(std::vector<int>{0, 0})), 0);
}

TEST(Cech, PrincipalIdealOnRing) {
  CechCohomology<Q> c(mideal(2, {{1, 0}}), MonomialIdeal::zero(2), {});
  EXPECT_EQ(c.piece(1, Multidegree(std::vector<int>{-1, 0})), 1);
  EXPECT_EQ(c.piece(1, Multidegree(std::vector<int>{0, 0})), 0);
  EXPECT_EQ(c.piece(1, Multidegree(std::vector<int>{-1, -1})), 0);
}

TEST(Cech, TorsionModuleIsItsOwnH0) {
  CechCohomology<Q> c(mideal(2, {{1, 0}}), mideal(2, {{1, 0}}), {});
  EXPECT_EQ(c.piece(0, Multidegree(std::vector<int>{0, 0})), 1);
  EXPECT_EQ(c.piece(1, Multidegree(std::vector<int>{0, 0})), 0);
}

TEST(Cech, GradeCdExamples) {
  EXPECT_EQ(grade_cd_monomial(MonomialIdeal::maximal(2), lp_ideal()), std::pair(ExtendedInt(0), ExtendedInt(1)));
  auto x1 = mideal(2, {{1, 0}});
  EXPECT_EQ(grade_cd_monomial(x1, MonomialIdeal::zero(2)), std::pair(ExtendedInt(1), ExtendedInt(1)));
  EXPECT_EQ(grade_cd_monomial(x1, x1), std::pair(ExtendedInt(0), ExtendedInt(0)));
}

TEST(Cech, DegenerateConventions) {
  auto unit = MonomialIdeal::unit(2);
  EXPECT_EQ(grade_cd_monomial(unit, lp_ideal()),
            std::pair(ExtendedInt::plus_infinity(), ExtendedInt::minus_infinity()));
  EXPECT_EQ(grade_cd_monomial(MonomialIdeal::maximal(2), unit),
            std::pair(ExtendedInt::plus_infinity(), ExtendedInt::minus_infinity()));
  EXPECT_THROW(dimension_filtration(MonomialIdeal::maximal(2), unit), std::invalid_argument);
}

TEST(Cech, ClampInvariance) {
  std::mt19937_64 rng(43);
  for (int inst = 0; inst < 10; ++inst) {
    auto i = random_ideal(rng, 3, 1, 3);
    auto j = random_ideal(rng, 3, 3, 3);
    CechCohomology<Q> c(i, j, {});
    const auto& up = c.box().upper();
    for (int s = 0; s < 200; ++s) {
      Multidegree a(3);
      for (std::size_t v = 0; v < 3; ++v) a[v] = std::uniform_int_distribution<int>(-4, up[v] + 3)(rng);
      for (int t = 0; t <= c.length(); ++t) EXPECT_EQ(c.piece(t, a), c.piece(t, c.box().clamp(a)));
    }
  }
}

TEST(Cech, AgreesWithDualityAtMaximalIdeal) {
  std::mt19937_64 rng(44);
  auto r = ring(3);
  for (int t = 0; t < 40; ++t) {
    auto j = random_ideal(rng, 3, 2, 4);
    auto [g, cd] = grade_cd_monomial(MonomialIdeal::maximal(3), j);
    auto m = quotient(r, j);
    EXPECT_EQ(g, depth_m(m));
    EXPECT_EQ(cd, krull_dim(m));
    EXPECT_EQ(finiteness_dim_cech(MonomialIdeal::unit(3), j), finiteness_dim_m(m));
  }
}

TEST(Cech, GradeAgreesWithExtForArbitraryIdeals) {
  std::mt19937_64 rng(45);
  auto r = ring(3);
  for (int t = 0; t < 40; ++t) {
    auto i = random_ideal(rng, 3, 1, 3);
    auto j = random_ideal(rng, 3, 2, 3);
    std::vector<Poly> gens;
    for (const auto& m : i.generators()) gens.push_back(Poly::monomial(r, m, Q(1)));
    EXPECT_EQ(grade_cd_monomial(i, j).first, grade_via_ext(gens, quotient(r, j)));
  }
}

TEST(Cech, CdDependsOnlyOnSupport) {
  std::mt19937_64 rng(46);
  for (int t = 0; t < 60; ++t) {
    auto i = random_ideal(rng, 3, 1, 3);
    auto j = random_ideal(rng, 3, 2, 4);
    auto cds = prime_cds(i, associated_primes(j));
    ExtendedInt top = ExtendedInt::minus_infinity();
    for (const auto& [p, c] : cds) top = std::max(top, c);
    EXPECT_EQ(grade_cd_monomial(i, j).second, top);
  }
}

TEST(Cech, CdOfShortExactSequenceIsMax) {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 60; ++t) {
    auto i = random_ideal(rng, 3, 1, 3);
    auto j = random_ideal(rng, 3, 2, 3);
    auto k = j + random_ideal(rng, 3, 2, 2);
    if (k.is_unit() || k == j) continue;
    auto whole = grade_cd_monomial(i, j).second;
    auto sub = grade_cd_monomial(i, k, j).second;
    auto top = grade_cd_monomial(i, k).second;
    EXPECT_EQ(whole, std::max(sub, top));
  }
}

TEST(Filtration, LpAtMaximalIdeal) {
  auto f = dimension_filtration(MonomialIdeal::maximal(2), lp_ideal());
  ASSERT_EQ(f.length(), 2u);
  EXPECT_EQ(f.ideal(1), mideal(2, {{1, 0}}));
  EXPECT_EQ(f.steps[0].cd, ExtendedInt(0));
  EXPECT_TRUE(f.ideal(2).is_unit());
  EXPECT_EQ(f.steps[1].cd, ExtendedInt(1));
}

TEST(Filtration, CohenMacaulayIsTrivial) {
  auto f = dimension_filtration(MonomialIdeal::maximal(2), np_ideal());
  ASSERT_EQ(f.length(), 1u);
  EXPECT_EQ(f.steps[0].cd, ExtendedInt(1));
}

TEST(Filtration, UnmixedIsTrivial) {
  auto f = dimension_filtration(MonomialIdeal::maximal(2), mideal(2, {{1, 1}}));
  ASSERT_EQ(f.length(), 1u);
  EXPECT_TRUE(f.ideal(1).is_unit());
}

TEST(Filtration, StepsAreLargestSubmodulesBruteForce) {
  std::mt19937_64 rng(48);
  std::vector<std::pair<MonomialIdeal, MonomialIdeal>> cases = {{MonomialIdeal::maximal(2), lp_ideal()}};
  while (cases.size() < 12) cases.emplace_back(random_ideal(rng, 3, 1, 2), random_ideal(rng, 3, 2, 4));
  for (const auto& [i, j] : cases) {
    auto f = dimension_filtration(i, j);
    const std::size_t n = j.nvars();
    for (std::size_t k = 1; k <= f.length(); ++k) {
      EXPECT_EQ(grade_cd_monomial(i, f.ideal(k), j).second, f.steps[k - 1].cd);
      if (k > 1) {
        EXPECT_LT(f.steps[k - 2].cd, f.steps[k - 1].cd);
      }
      // A monomial u generates a submodule of cd at most c_k exactly when it lies in K_k.
      for (const auto& u : box_monomials(n, 3)) {
        if (j.contains(u)) continue;
        auto cyc = j + MonomialIdeal(n, {u});
        bool small = grade_cd_monomial(i, cyc, j).second <= f.steps[k - 1].cd;
        EXPECT_EQ(small, f.ideal(k).contains(u));
      }
    }
  }
}

TEST(SeqCM, Examples) {
  EXPECT_TRUE(is_seqCM_wrt(MonomialIdeal::maximal(2), lp_ideal()).sequentially_cm);
  EXPECT_TRUE(is_seqCM_wrt(MonomialIdeal::maximal(2), np_ideal()).sequentially_cm);
  auto v = is_seqCM_wrt(MonomialIdeal::maximal(3), mideal(3, {{1, 1, 0}, {1, 0, 1}}));
  EXPECT_TRUE(v.sequentially_cm);
  ASSERT_EQ(v.filtration.length(), 2u);
  EXPECT_EQ(v.filtration.ideal(1), mideal(3, {{1, 0, 0}}));
  // Two planes meeting in a point are not.
  auto skew = mideal(4, {{1, 0, 1, 0}, {1, 0, 0, 1}, {0, 1, 1, 0}, {0, 1, 0, 1}});
  EXPECT_FALSE(is_seqCM_wrt(MonomialIdeal::maximal(4), skew).sequentially_cm);
}

TEST(SeqCM, AgreesWithDualityCriterion) {
  std::mt19937_64 rng(49);
  auto r = ring(3);
  for (int t = 0; t < 40; ++t) {
    auto j = random_ideal(rng, 3, 2, 4);
    EXPECT_EQ(is_seqCM_wrt(MonomialIdeal::maximal(3), j).sequentially_cm,
              cm_class_m(quotient(r, j)).sequentially_cm)
        << j.to_string(r->names());
  }
}

TEST(FiltrationProperties, QuotientAssociatedPrimes) {
  std::mt19937_64 rng(50);
  for (int t = 0; t < 50; ++t) {
    auto i = random_ideal(rng, 3, 1, 3);
    auto j = random_ideal(rng, 3, 2, 4);
    if (i.is_unit()) continue;
    auto f = dimension_filtration(i, j);
    auto ass = associated_primes(j);
    auto cds = prime_cds(i, ass);
    for (std::size_t k = 1; k <= f.length(); ++k) {
      std::set<VarSet> want;
      for (VarSet p : ass)
        if (cds.at(p) == f.steps[k - 1].cd) want.insert(p);
      EXPECT_EQ(as_set(associated_primes(f.ideal(k), f.ideal(k - 1))), want);
    }
  }
}

TEST(FiltrationProperties, SeqCMCohomologyAndGrades) {
  std::mt19937_64 rng(51);
  int seen = 0;
  for (int t = 0; t < 120 && seen < 30; ++t) {
    auto i = random_ideal(rng, 3, 1, 3);
    auto j = random_ideal(rng, 3, 2, 4);
    if (i.is_unit()) continue;
    auto v = is_seqCM_wrt(i, j);
    if (!v.sequentially_cm) continue;
    ++seen;
    // Nonvanishing cohomology sits exactly at the step cds.
    CechCohomology<Q> c(i, j, {});
    auto nz = c.nonvanishing();
    std::set<long> got, want;
    for (std::size_t s = 0; s < nz.size(); ++s)
      if (nz[s]) got.insert(static_cast<long>(s));
    for (const auto& st : v.filtration.steps) want.insert(st.cd.value());
    EXPECT_EQ(got, want);
    // Every nonzero step has the grade of the whole module.
    auto g = grade_cd_monomial(i, j).first;
    for (std::size_t k = 1; k <= v.filtration.length(); ++k)
      EXPECT_EQ(grade_cd_monomial(i, v.filtration.ideal(k), j).first, g);
  }
  EXPECT_GE(seen, 10);
}
