#include <gtest/gtest.h>

#include <random>

#include <vca/monomial.hpp>

#include "oracles.hpp"

using vca::ExponentVector;
using vca::MonomialIdeal;

namespace {

MonomialIdeal ideal3(std::vector<ExponentVector> gens) { return MonomialIdeal(3, std::move(gens)); }

const MonomialIdeal kTriangle = ideal3({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
const MonomialIdeal kMaximal = ideal3({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});

}  // namespace

TEST(Minimalize, DropsMultiples) {
  auto i = vca::minimalize(2, {{2, 0}, {1, 1}, {2, 1}});
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{{2, 0}, {1, 1}}));
}

TEST(Minimalize, EmptyIsZeroIdeal) {
  auto i = vca::minimalize(2, {});
  EXPECT_TRUE(i.is_zero());
  EXPECT_FALSE(i.is_unit());
}

TEST(Minimalize, OneSwallowsEverything) {
  auto i = vca::minimalize(2, {{0, 0}, {1, 0}});
  EXPECT_TRUE(i.is_unit());
  EXPECT_EQ(i, MonomialIdeal::unit(2));
}

TEST(Minimalize, RejectsMixedLengths) {
  EXPECT_THROW(vca::minimalize(2, {{1, 0}, {1, 0, 0}}), vca::DimensionMismatch);
  EXPECT_THROW(vca::minimalize(2, {{-1, 0}}), vca::InvalidArgument);
}

TEST(Minimalize, CanonicalOrder) {
  // degree first, then x1 > x2 > x3
  auto i = ideal3({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {0, 0, 3}});
  EXPECT_EQ(i.generators(), (std::vector<ExponentVector>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 3}}));
}

TEST(Contains, Basic) {
  auto i = ideal3({{1, 1, 0}, {0, 1, 1}});
  EXPECT_TRUE(i.contains(ExponentVector{1, 1, 1}));
  EXPECT_FALSE(i.contains(ExponentVector{1, 0, 1}));
  EXPECT_FALSE(MonomialIdeal::zero(3).contains(ExponentVector{4, 4, 4}));
  EXPECT_THROW(i.contains(ExponentVector{1, 1}), vca::DimensionMismatch);
}

TEST(Intersect, TwoPrimes) {
  auto xy = ideal3({{1, 0, 0}, {0, 1, 0}});
  auto yz = ideal3({{0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(vca::intersect(xy, yz), ideal3({{0, 1, 0}, {1, 0, 1}}));
  EXPECT_EQ(vca::intersect(xy, MonomialIdeal::unit(3)), xy);
  EXPECT_EQ(vca::intersect(xy, xy), xy);
  EXPECT_THROW(vca::intersect(xy, MonomialIdeal::unit(2)), vca::DimensionMismatch);
}

TEST(Intersect, MatchesMembershipOracleOnBox) {
  auto xy = ideal3({{1, 0, 0}, {0, 1, 0}});
  auto yz = ideal3({{0, 1, 0}, {0, 0, 1}});
  auto both = vca::intersect(xy, yz);
  for (const auto& m : oracle::box(3, 3))
    EXPECT_EQ(both.contains(m), oracle::in_generated(xy.generators(), m) && oracle::in_generated(yz.generators(), m));
}

TEST(Multiply, SquareOfMaximalIdealInTwoVariables) {
  auto m = MonomialIdeal(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(vca::multiply(m, m), MonomialIdeal(2, {{2, 0}, {1, 1}, {0, 2}}));
}

TEST(Power, TriangleSquare) {
  // All pairwise products of (xy, yz, xz); none divides another.
  auto sq = vca::power(kTriangle, 2);
  EXPECT_EQ(sq, ideal3({{2, 2, 0}, {1, 2, 1}, {2, 1, 1}, {0, 2, 2}, {1, 1, 2}, {2, 0, 2}}));
  for (const auto& g : sq.generators()) EXPECT_EQ(vca::total_degree(g), 4);
}

TEST(Power, IdentitiesAndBinaryExponentiation) {
  EXPECT_EQ(vca::power(kTriangle, 1), kTriangle);
  EXPECT_TRUE(vca::power(kTriangle, 0).is_unit());
  auto repeated = kTriangle;
  for (int k = 2; k <= 5; ++k) {
    repeated = vca::multiply(repeated, kTriangle);
    EXPECT_EQ(vca::power(kTriangle, k), repeated) << "k=" << k;
  }
}

TEST(Power, OverflowIsDetected) {
  auto huge = MonomialIdeal(1, {{std::int64_t{1} << 62}});
  EXPECT_THROW(vca::power(huge, 4), vca::OverflowError);
}

TEST(Sum, Union) {
  auto s = vca::sum(ideal3({{1, 0, 0}}), ideal3({{2, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(s, ideal3({{1, 0, 0}, {0, 1, 0}}));
}

TEST(Colon, Examples) {
  auto i = ideal3({{2, 0, 0}, {1, 1, 0}});
  auto x = ideal3({{1, 0, 0}});
  EXPECT_EQ(vca::colon(i, x), ideal3({{1, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(vca::colon(i, MonomialIdeal::unit(3)), i);
  EXPECT_TRUE(vca::colon(kTriangle, ideal3({{1, 1, 1}})).is_unit());
  EXPECT_THROW(vca::colon(i, MonomialIdeal::zero(3)), vca::UndefinedColon);
}

TEST(Saturate, ChainReachesUnit) {
  auto i = ideal3({{2, 1, 0}, {3, 0, 0}});
  auto x = ideal3({{1, 0, 0}});
  // Oracle: iterate the colon five times and check it is stable.
  auto chain = i;
  for (int t = 0; t < 5; ++t) chain = vca::colon(chain, x);
  EXPECT_EQ(vca::colon(chain, x), chain);
  EXPECT_EQ(vca::saturate(i, x), chain);
  EXPECT_TRUE(chain.is_unit());
}

TEST(Saturate, Examples) {
  EXPECT_EQ(vca::saturate(kTriangle, MonomialIdeal::unit(3)), kTriangle);
  EXPECT_EQ(vca::colon(kTriangle, kMaximal), kTriangle);
  EXPECT_EQ(vca::saturate(kTriangle, kMaximal), kTriangle);
}

TEST(SymbolicPowerWrt, TriangleSecondPower) {
  auto p2 = vca::symbolic_power_wrt(kTriangle, kMaximal, 2);
  EXPECT_TRUE(p2.contains(ExponentVector{1, 1, 1}));
  EXPECT_FALSE(vca::power(kTriangle, 2).contains(ExponentVector{1, 1, 1}));
  // Equals the intersection of squares of the three minimal primes.
  auto pxy = ideal3({{1, 0, 0}, {0, 1, 0}});
  auto pyz = ideal3({{0, 1, 0}, {0, 0, 1}});
  auto pxz = ideal3({{1, 0, 0}, {0, 0, 1}});
  auto expected = vca::intersect(vca::intersect(vca::power(pxy, 2), vca::power(pyz, 2)), vca::power(pxz, 2));
  EXPECT_EQ(p2, expected);
  EXPECT_FALSE(vca::equals(vca::power(kTriangle, 2), p2));
}

TEST(SymbolicPowerWrt, CoprimeSaturationIsIdentity) {
  auto x = ideal3({{1, 0, 0}});
  auto y = ideal3({{0, 1, 0}});
  EXPECT_EQ(vca::symbolic_power_wrt(x, y, 1), x);
}

TEST(Equals, Basics) {
  auto a = MonomialIdeal(2, {{1, 0}, {0, 1}});
  auto b = MonomialIdeal(2, {{0, 1}, {1, 0}});
  EXPECT_TRUE(vca::equals(a, b));
  EXPECT_TRUE(vca::equals(MonomialIdeal::zero(2), MonomialIdeal::zero(2)));
  EXPECT_THROW(vca::equals(a, MonomialIdeal::zero(3)), vca::DimensionMismatch);
}

TEST(PrimePower, WeakCompositions) {
  std::vector<int> f{0, 1};
  auto p = vca::prime_power(3, f, 3);
  EXPECT_EQ(p, ideal3({{3, 0, 0}, {2, 1, 0}, {1, 2, 0}, {0, 3, 0}}));
  EXPECT_TRUE(vca::prime_power(3, f, 0).is_unit());
}

// Random ideals in <= 4 variables with generators of degree <= 6: every
// operation agrees with its defining membership condition on a box.
TEST(MonomialProperties, MembershipAgreesWithOracle) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + trial % 4;
    auto gi = oracle::random_generators(rng, n, 1 + trial % 4, 6);
    auto gj = oracle::random_generators(rng, n, 1 + (trial / 4) % 3, 3);
    MonomialIdeal i(n, gi), j(n, gj);
    auto inter = vca::intersect(i, j);
    auto prod = vca::multiply(i, j);
    auto col = vca::colon(i, j);
    auto sat = vca::saturate(i, j);
    for (const auto& m : oracle::box(n, n <= 2 ? 9 : 5)) {
      ASSERT_EQ(inter.contains(m), oracle::in_generated(gi, m) && oracle::in_generated(gj, m));
      ASSERT_EQ(prod.contains(m), oracle::in_product(gi, gj, m));
      ASSERT_EQ(col.contains(m), oracle::in_colon(gi, gj, m));
      ASSERT_EQ(sat.contains(m), oracle::in_saturation(gi, gj, m));
    }
  }
}

TEST(MonomialProperties, AlgebraicLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + trial % 3;
    MonomialIdeal a(n, oracle::random_generators(rng, n, 3, 4));
    MonomialIdeal b(n, oracle::random_generators(rng, n, 2, 4));
    MonomialIdeal c(n, oracle::random_generators(rng, n, 2, 3));
    EXPECT_EQ(vca::intersect(a, b), vca::intersect(b, a));
    EXPECT_EQ(vca::intersect(vca::intersect(a, b), c), vca::intersect(a, vca::intersect(b, c)));
    EXPECT_EQ(vca::intersect(a, a), a);
    EXPECT_EQ(vca::multiply(a, vca::sum(b, c)), vca::sum(vca::multiply(a, b), vca::multiply(a, c)));
    if (!b.is_zero()) {
      EXPECT_TRUE(vca::colon(vca::multiply(a, b), b).contains(a));
      auto s = vca::saturate(a, b);
      EXPECT_EQ(vca::saturate(s, b), s);
    }
    for (int x = 1; x <= 2; ++x)
      for (int y = 1; y <= 2; ++y)
        EXPECT_TRUE(vca::power(a, x + y).contains(vca::multiply(vca::power(a, x), vca::power(a, y))));
  }
}

TEST(MonomialProperties, SymbolicPowersAreGraded) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3;
    MonomialIdeal i(n, oracle::random_generators(rng, n, 3, 3));
    MonomialIdeal j(n, oracle::random_generators(rng, n, 2, 2));
    if (j.is_zero()) continue;
    for (int a = 1; a <= 2; ++a)
      for (int b = 1; b <= 2; ++b) {
        auto lhs = vca::multiply(vca::symbolic_power_wrt(i, j, a), vca::symbolic_power_wrt(i, j, b));
        EXPECT_TRUE(vca::symbolic_power_wrt(i, j, a + b).contains(lhs));
      }
  }
}
