#include <gtest/gtest.h>

#include "support.hpp"

using namespace tlc;
using namespace tlc::test;

TEST(ExtendedInt, FiniteAddition) { EXPECT_EQ(ExtendedInt(2) + ExtendedInt(3), ExtendedInt(5)); }

TEST(ExtendedInt, InfinitiesAbsorb) {
  EXPECT_EQ(ExtendedInt(2) + ExtendedInt::plus_infinity(), ExtendedInt::plus_infinity());
  EXPECT_EQ(ExtendedInt::minus_infinity() + ExtendedInt(1), ExtendedInt::minus_infinity());
}

TEST(ExtendedInt, OppositeInfinitiesThrow) {
  EXPECT_THROW(ExtendedInt::plus_infinity() + ExtendedInt::minus_infinity(), std::domain_error);
}

TEST(ExtendedInt, OrderAndMinMax) {
  const ExtendedInt lo = ExtendedInt::minus_infinity(), hi = ExtendedInt::plus_infinity();
  EXPECT_LT(lo, ExtendedInt(-1000));
  EXPECT_LT(ExtendedInt(1000), hi);
  EXPECT_EQ(std::min(hi, ExtendedInt(4)), ExtendedInt(4));
  EXPECT_EQ(std::max(lo, ExtendedInt(-4)), ExtendedInt(-4));
}

TEST(ExtendedInt, TextRoundTrip) {
  for (auto x : {ExtendedInt(-3), ExtendedInt(0), ExtendedInt::plus_infinity(), ExtendedInt::minus_infinity()})
    EXPECT_EQ(ExtendedInt::parse(x.to_string()), x);
}

TEST(Rational, ExactArithmetic) {
  Q a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Q(1, 2));
  EXPECT_EQ(a * b, Q(1, 18));
  EXPECT_EQ((a / b), Q(2));
  EXPECT_THROW(Q(0).inverse(), std::domain_error);
}

TEST(PrimeField, ReducesAndInverts) {
  PrimeField a(-1, 7);
  EXPECT_EQ(a.value(), 6u);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_THROW(PrimeField(3, 7) + PrimeField(3, 11), std::logic_error);
}

template <typename F>
void field_axioms(std::mt19937_64& rng, const F& one) {
  std::uniform_int_distribution<long> d(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    F a = F::from_integer(d(rng), one), b = F::from_integer(d(rng), one), c = F::from_integer(d(rng), one);
    if constexpr (std::is_same_v<F, Rational>) {
      long den = d(rng);
      if (den != 0) a = a / F::from_integer(den, one);
    }
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(FieldAxioms, RationalRandomized) {
  std::mt19937_64 rng(11);
  field_axioms(rng, Q(1));
}

TEST(FieldAxioms, PrimeFieldRandomized) {
  std::mt19937_64 rng(12);
  field_axioms(rng, PrimeField::one({32003}));
  field_axioms(rng, PrimeField::one({5}));
}

TEST(Multidegree, TotalIsEntrySum) {
  Multidegree a(std::vector<int>{-1, 3, 2});
  EXPECT_EQ(a.total(), 4);
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(concat(a, Multidegree(std::vector<int>{5})).total(), 9);
}

TEST(Monomial, DivisibilityIsComponentwise) {
  EXPECT_TRUE(mono({1, 0}).divides(mono({2, 1})));
  EXPECT_FALSE(mono({0, 2}).divides(mono({2, 1})));
  EXPECT_EQ(lcm(mono({2, 0, 1}), mono({1, 3, 0})), mono({2, 3, 1}));
  EXPECT_EQ(gcd(mono({2, 0, 1}), mono({1, 3, 0})), mono({1, 0, 0}));
}

TEST(Monomial, DivisibilityPartialOrderAndLcmJoin) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> e(0, 3);
  auto draw = [&] { return mono({e(rng), e(rng), e(rng)}); };
  for (int t = 0; t < 300; ++t) {
    Monomial a = draw(), b = draw(), c = draw();
    EXPECT_TRUE(a.divides(a));
    if (a.divides(b) && b.divides(a)) {
      EXPECT_EQ(a, b);
    }
    if (a.divides(b) && b.divides(c)) {
      EXPECT_TRUE(a.divides(c));
    }
    Monomial l = lcm(a, b);
    EXPECT_TRUE(a.divides(l) && b.divides(l));
    if (a.divides(c) && b.divides(c)) {
      EXPECT_TRUE(l.divides(c));
    }
    EXPECT_EQ(gcd(a, b) * l, a * b);
  }
}

TEST(Polynomial, AddCancels) {
  auto r = ring(2);
  auto x1 = var(r, 0), x2 = var(r, 1);
  EXPECT_EQ((x1 + x2) + (cst(r, 0) - x1), x2);
}

TEST(Polynomial, Square) {
  auto r = ring(2);
  auto x1 = var(r, 0);
  EXPECT_EQ(x1 * x1, Poly::monomial(r, mono({2, 0}), Q(1)));
}

TEST(Polynomial, DifferenceOfSquares) {
  auto r = ring(2);
  auto x1 = var(r, 0), x2 = var(r, 1);
  EXPECT_EQ((x1 + x2) * (x1 - x2), x1 * x1 - x2 * x2);
  EXPECT_EQ(((x1 + x2) * (x1 - x2)).to_string(), "x1^2 - x2^2");
}

TEST(Polynomial, NoZeroCoefficientsStored) {
  auto r = ring(2);
  auto x1 = var(r, 0);
  auto z = x1 - x1;
  EXPECT_TRUE(z.is_zero());
  EXPECT_TRUE(z.terms().empty());
}

TEST(Polynomial, RingMismatchThrows) {
  auto a = ring(2), b = ring(2, "y");
  EXPECT_THROW(var(a, 0) + var(b, 0), RingError);
}

TEST(Polynomial, HomogeneityFlag) {
  auto r = ring(2);
  auto x1 = var(r, 0), x2 = var(r, 1);
  EXPECT_TRUE((x1 * x2 + x2 * x2).is_homogeneous());
  EXPECT_FALSE((x1 * x2 + x2).is_homogeneous());
}

namespace {

Poly random_poly(std::mt19937_64& rng, const RingPtr<Q>& r) {
  std::uniform_int_distribution<int> e(0, 2), c(-5, 5), k(1, 8);
  Poly p(r);
  int terms = k(rng);
  for (int t = 0; t < terms; ++t) p = p + Poly::monomial(r, mono({e(rng), e(rng), e(rng)}), Q(c(rng)));
  return p;
}

}  // namespace

TEST(Polynomial, MultiplicationCommutativeAssociativeRandomized) {
  std::mt19937_64 rng(5);
  auto r = ring(3);
  for (int t = 0; t < 60; ++t) {
    Poly a = random_poly(rng, r), b = random_poly(rng, r), c = random_poly(rng, r);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(FreeModuleElement, ComponentsStayInRank) {
  auto r = ring(2);
  auto e = FreeModuleElement<Q>::from_polynomials({var(r, 0), cst(r, 0), var(r, 1)});
  EXPECT_EQ(e.max_component(), 2);
  EXPECT_THROW(Matrix<Q>::from_columns(FreeModule<Q>(r, {0, 0}), {e}), std::invalid_argument);
}

TEST(FreeModuleElement, DegreeUsesTwists) {
  auto r = ring(2);
  auto e = FreeModuleElement<Q>::from_polynomials({var(r, 0), var(r, 1) * var(r, 1)});
  EXPECT_EQ(e.degree({1, 0}), 2);
  EXPECT_THROW(e.degree({0, 0}), std::invalid_argument);
}
