#include "elat/numeric.hpp"

#include <gtest/gtest.h>

using namespace elat;

TEST(ParseRational, IntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
}

TEST(ParseRational, RejectsInexactOrMalformed) {
  for (const char* bad : {"0.5", "1e3", "", "/2", "1/", "1/0", "a", "1//2", "1/2/3", " 1"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(IsqrtRationalFloor, Examples) {
  EXPECT_EQ(isqrt_rational_floor(Rational(0)), 0);
  EXPECT_EQ(isqrt_rational_floor(Rational(8)), 2);
  EXPECT_EQ(isqrt_rational_floor(Rational(9999, 100)), 9);
  EXPECT_EQ(isqrt_rational_floor(Rational(9)), 3);
  EXPECT_EQ(isqrt_rational_floor(Rational(1, 4)), 0);
}

TEST(IsqrtRationalFloor, DefiningInequalityOnFractions) {
  for (long num = 0; num <= 3000; num += 7) {
    for (long den : {1L, 2L, 3L, 7L, 100L}) {
      Rational t(num, den);
      t.canonicalize();
      const Integer k = isqrt_rational_floor(t);
      EXPECT_LE(Rational(k * k), t);
      EXPECT_GT(Rational((k + 1) * (k + 1)), t);
    }
  }
}

TEST(IsqrtU64, PerfectSquaresAndNeighbours) {
  for (std::uint64_t r : {0ULL, 1ULL, 2ULL, 94906265ULL, 4294967295ULL, 3037000499ULL}) {
    const std::uint64_t sq = r * r;
    EXPECT_EQ(isqrt_u64(sq), r);
    if (sq > 0) {
      EXPECT_EQ(isqrt_u64(sq - 1), r - 1);
    }
  }
  EXPECT_EQ(isqrt_u64(~std::uint64_t{0}), 4294967295ULL);
}

TEST(Floor, NegativeFractionsRoundDown) {
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(floor(Rational(-4)), -4);
}

TEST(Precision, ScopedAndFormatted) {
  {
    const ScopedPrecision p(30);
    EXPECT_EQ(working_digits(), 30u);
    EXPECT_EQ(format_real(pi(), 10), "3.141592654e+00");
  }
  EXPECT_EQ(working_digits(), kDefaultDigits);
}

TEST(BudgetExceeded, CarriesNumbers) {
  const BudgetExceeded e(12, 5);
  EXPECT_EQ(e.needed(), 12u);
  EXPECT_EQ(e.budget(), 5u);
}
