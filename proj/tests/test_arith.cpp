#include "elat/arith.hpp"
#include "elat/crosscheck.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace elat;
using namespace elat::arith;

namespace {

// r(n) by the double loop over [-sqrt n - 1, sqrt n + 1]^2
std::uint64_t r2_box(std::uint64_t n) {
  const auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))) + 1;
  std::uint64_t c = 0;
  for (std::int64_t u = -b; u <= b; ++u) {
    for (std::int64_t v = -b; v <= b; ++v) c += static_cast<std::uint64_t>(u * u + v * v) == n;
  }
  return c;
}

}  // namespace

TEST(R2, Examples) {
  EXPECT_EQ(r2(0), 1u);
  EXPECT_EQ(r2(1), r2_box(1));
  EXPECT_EQ(r2(1), 4u);
  EXPECT_EQ(r2(25), r2_box(25));
  EXPECT_EQ(r2(25), 12u);
  EXPECT_EQ(r2(3), 0u);
}

TEST(R2, SieveMatchesEnumerationUpTo1e4) {
  const RnTable table(10'000);
  for (std::uint64_t n = 0; n <= 10'000; ++n) ASSERT_EQ(table[n], r2(n)) << n;
  for (std::uint64_t n = 0; n <= 500; ++n) ASSERT_EQ(table[n], r2_box(n)) << n;
}

TEST(RnTable, Invariants) {
  const RnTable table(50'000);
  EXPECT_EQ(table[0], 1u);
  std::uint64_t sum = 0;
  for (std::uint64_t n = 0; n <= table.limit(); ++n) {
    if (n > 0) {
      ASSERT_EQ(table[n] % 4, 0u) << n;
    }
    sum += table[n];
  }
  EXPECT_LE(sum, 4 * table.limit() + 4);
  EXPECT_EQ(table.prefix(table.limit()), sum);
}

TEST(CumulativeSums, Examples) {
  EXPECT_EQ(big_r1(Rational(1, 2)), 0u);
  EXPECT_EQ(big_r1(Rational(1)), r2_box(1));
  EXPECT_EQ(big_r12(Rational(2, 5)), 0u);
  EXPECT_EQ(big_r12(Rational(1)), r2_box(2));
  EXPECT_EQ(big_r2(Rational(1)), r2_box(2) * r2_box(2));
  EXPECT_EQ(big_r2(Rational(1)), 16u);
  EXPECT_EQ(big_r2(Rational(2)), r2_box(3) * r2_box(3) + r2_box(4) * r2_box(4));
  EXPECT_EQ(big_r2(Rational(2)), 16u);
  EXPECT_THROW(big_r2(Rational(1, 2)), DomainError);
}

TEST(CumulativeSums, R1At29WithinFour) {
  std::uint64_t v = 0;
  for (std::uint64_t n = 1; n <= 29; ++n) v += r2_box(n);
  EXPECT_EQ(big_r1(Rational(29)), v);
  EXPECT_LE(v, 4u * 29u);
}

TEST(CumulativeSums, FractionalArgumentsFloorExactly) {
  // 2x = 2*(7/2) = 7 exactly: the window is (3.5, 7]
  std::uint64_t v = 0;
  for (std::uint64_t n = 4; n <= 7; ++n) v += r2_box(n);
  EXPECT_EQ(big_r12(Rational(7, 2)), v);
  // just below an integer must not round up
  EXPECT_EQ(big_r1(Rational(99999, 10000)), big_r1(Rational(9)));
}

TEST(ConvR, Examples) {
  EXPECT_EQ(conv_r(1), 16u);
  EXPECT_EQ(conv_r(2), r2_box(1) * r2_box(2) + r2_box(2) * r2_box(1));
  EXPECT_EQ(conv_r(2), 32u);
}

TEST(ConvR, TableMatchesDivisorLoopAndDominatesSquare) {
  const RnTable table(20'000);
  const auto conv = conv_table(table, 20'000);
  for (std::uint64_t n = 1; n <= 20'000; ++n) {
    if (n <= 2000) {
      std::uint64_t direct = 0;
      for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0) direct += std::uint64_t{table[d]} * table[n / d];
      }
      ASSERT_EQ(conv[n], direct) << n;
      ASSERT_EQ(table.conv_r(n), direct) << n;
    }
    ASSERT_LE(std::uint64_t{table[n]} * table[n], conv[n]) << n;
  }
}

TEST(R3Star, Examples) {
  EXPECT_EQ(r3_star(Rational(1)), crosscheck::brute_r3_star(Rational(1)));
  EXPECT_EQ(r3_star(Rational(1)), 14);
  EXPECT_EQ(r3_star(Rational(1, 2)), 0);
  EXPECT_THROW(r3_star(Rational(0)), DomainError);
  for (int x = 1; x <= 4; ++x) {
    const Integer c = r3_star(Rational(x));
    EXPECT_EQ(c, crosscheck::brute_r3_star(Rational(x)));
    EXPECT_LE(c.get_d(), 14.0 * std::pow(x, 1.5));
  }
}

TEST(CylinderNorm, ZeroOnlyAtOrigin) {
  EXPECT_EQ(CylinderNormIndex({0, 0, 0}).norm_sq, 0u);
  EXPECT_EQ(CylinderNormIndex({1, 2, 1}).norm_sq, 5u);
  EXPECT_EQ(CylinderNormIndex({0, 0, -3}).norm_sq, 9u);
}

TEST(G0, MinOfRootAndInverse) {
  EXPECT_NEAR(static_cast<double>(g0(Rational(1, 4))), 0.5, 1e-15);
  EXPECT_NEAR(static_cast<double>(g0(Rational(4))), 0.25, 1e-15);
  EXPECT_NEAR(static_cast<double>(g0(Rational(1))), 1.0, 1e-15);
}

TEST(GStarInner, ZeroBelowG0AndFourteenAtUnit) {
  EXPECT_EQ(gstar_sum_inner(Rational(1, 2), Rational(1)).value, 0.0L);
  EXPECT_EQ(gstar_sum_inner(Rational(1, 8), Rational(4)).value, 0.0L);  // g0 = 1/4
  const auto unit = gstar_sum_inner(Rational(1), Rational(1));
  const long double brute = crosscheck::brute_gstar_sum(Rational(1), 3.0L, 0, Rational(1));
  EXPECT_NEAR(static_cast<double>(unit.value), static_cast<double>(brute), 1e-15);
  EXPECT_NEAR(static_cast<double>(unit.value), 14.0, 1e-15);
  EXPECT_LE(unit.upper(), gstar_inner_bound(Rational(1), Rational(1)));
}

TEST(GStarInner, RowFormulaMatchesTripleLoop) {
  for (const Rational& a : {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1),
                            Rational(3, 2), Rational(2), Rational(4)}) {
    for (const Rational& z : {Rational(1), Rational(3, 2), Rational(2), Rational(7, 2)}) {
      for (long double alpha : {3.0L, 4.5L, 7.0L}) {
        const auto fast = gstar_power_sum(a, alpha, Rational(1, 2), z);
        const long double brute = crosscheck::brute_gstar_sum(a, alpha, Rational(1, 2), z);
        EXPECT_NEAR(static_cast<double>(fast.value), static_cast<double>(brute),
                    1e-12 * std::max(1.0, static_cast<double>(brute)))
            << to_string(a) << " " << to_string(z);
      }
    }
  }
}

TEST(GStarInner, MonotoneInZ) {
  long double prev = 0;
  for (int k = 1; k <= 40; ++k) {
    const auto s = gstar_sum_inner(Rational(k) / 4, Rational(2, 3));
    EXPECT_GE(s.value, prev);
    prev = s.value;
  }
}

TEST(GStarTail, RejectsEmptyRange) {
  EXPECT_THROW(gstar_sum_tail(Rational(2), 4.0L, Rational(1), Rational(2)), DomainError);
  EXPECT_THROW(gstar_sum_tail(Rational(3), 4.0L, Rational(1), Rational(2)), DomainError);
  EXPECT_THROW(gstar_sum_tail(Rational(1), 3.0L, Rational(1), Rational(2)), DomainError);
}

TEST(GStarTail, Examples) {
  const auto c1 = gstar_sum_tail(Rational(1), 4.0L, Rational(1), Rational(20));
  EXPECT_NEAR(static_cast<double>(c1.bound), 56.0, 1e-12);
  EXPECT_TRUE(c1.certified());

  const auto c2 = gstar_sum_tail(Rational(2), 5.0L, Rational(1), Rational(40));
  EXPECT_NEAR(static_cast<double>(c2.bound), 8.75, 1e-12);
  EXPECT_TRUE(c2.certified());
  // enumerated head against the triple loop over 2 < g* <= 6 plus the fast 6 < g* <= 40
  const long double near = crosscheck::brute_gstar_sum(Rational(1), 5.0L, Rational(2), Rational(6));
  const auto far = gstar_power_sum(Rational(1), 5.0L, Rational(6), Rational(40));
  EXPECT_NEAR(static_cast<double>(c2.enumerated.value), static_cast<double>(near + far.value),
              1e-12);
}

TEST(GStarSum, BudgetIsEnforced) {
  EXPECT_THROW(gstar_power_sum(Rational(1), 4.0L, Rational(0), Rational(1000), 100),
               BudgetExceeded);
}
