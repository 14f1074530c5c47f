#include "elat/bound.hpp"

#include <gtest/gtest.h>

using namespace elat;
using namespace elat::bound;

namespace {

const Real kTiny = pow(Real(10), -40);

}  // namespace

TEST(LFactor, Examples) {
  const Real e = exp(Real(1));
  const Real base = log(Real(100));
  EXPECT_LT(abs(l_factor(e, Real(1)) - (base + 1)), kTiny);
  EXPECT_LT(abs(l_factor(1 / e, Real(1)) - (base + 1)), kTiny);
  EXPECT_LT(abs(l_factor(Real(1), Real(1)) - base), kTiny);
  EXPECT_LT(abs(l_factor(EllipsoidParams(Rational(1), Rational(15000))) - log(Real(1500000))),
            kTiny);
}

TEST(Preconditions, Examples) {
  EXPECT_TRUE(EllipsoidParams(Rational(1), Rational(15000)).precond_28());
  EXPECT_FALSE(EllipsoidParams(Rational(1), Rational(14999)).precond_28());
  EXPECT_TRUE(EllipsoidParams(Rational(1, 15000), Rational(15000)).precond_28());
  EXPECT_FALSE(EllipsoidParams(Rational(1, 15001), Rational(15000)).precond_28());
  EXPECT_FALSE(EllipsoidParams(Rational(15001), Rational(15000)).precond_28());
  EXPECT_FALSE(EllipsoidParams(Rational(1), Rational(1)).precond_27());
}

TEST(Preconditions, StrongImpliesWeak) {
  for (const int x : {15000, 20000, 100000, 1000000}) {
    const Rational xr(x);
    for (const Rational& a :
         {Rational(1 / xr), Rational(1, 1000), Rational(1, 7), Rational(1), Rational(13, 2), Rational(1000),
          Rational(xr / 2), xr}) {
      const EllipsoidParams p(a, xr);
      ASSERT_TRUE(p.precond_28());
      EXPECT_TRUE(p.precond_27()) << to_string(a) << " " << x;
      const auto yz = params_yz(p);
      EXPECT_GE(yz.y, 1);
      EXPECT_LE(3 * yz.y, to_real(xr));
    }
  }
}

TEST(ParamsYZ, Formulas) {
  const EllipsoidParams p(Rational(2), Rational(50000));
  const auto yz = params_yz(p);
  const Real l = l_factor(p);
  const Real y = Real("73.6") * pow(Real(2), Real(1) / 8) * pow(Real(50000), Real(3) / 16) *
                 pow(l, Real(3) / 8);
  EXPECT_LT(abs(yz.y - y), kTiny * y);
  EXPECT_LT(abs(yz.z - Real("0.3852") * sqrt(Real(50000) + 2 * y) / y), kTiny);
}

TEST(TheoremRhs, TotalIsSumAndAlphaRelation) {
  for (const Rational& a : {Rational(1, 4), Rational(1), Rational(3)}) {
    const auto b = theorem_rhs(EllipsoidParams(a, Rational(100000)));
    Real sum = 0;
    for (const auto& t : b.terms) {
      EXPECT_GT(t, 0);
      sum += t;
    }
    EXPECT_LT(abs(b.total - sum), kTiny * b.total);
    EXPECT_LT(abs(b.g0 * b.alpha0 - 1), kTiny);
    const Real ar = to_real(a);
    EXPECT_EQ(b.alpha0, max(ar, 1 / sqrt(ar)));
  }
}

TEST(TheoremRhs, UnitParameterTerms) {
  // a = 1: L = log(100 x), alpha0 = 1
  const Real x(15000);
  const auto b = theorem_rhs(EllipsoidParams(Rational(1), Rational(15000)));
  const Real l = log(100 * x);
  EXPECT_LT(abs(b.terms[0] - 1237 * pow(x, Real(11) / 16) * pow(l, Real(3) / 8)), kTiny * b.terms[0]);
  EXPECT_LT(abs(b.terms[4] - (268 * l + 159 + 2000) * sqrt(x)), kTiny * b.terms[4]);
  EXPECT_LT(abs(b.terms[5] - (Real("4.4") * l + Real("104.5"))), kTiny);
}

TEST(TheoremRhs, EveryTermIncreasesInX) {
  for (const Rational& a : {Rational(1, 2), Rational(1), Rational(4)}) {
    BoundBreakdown prev = theorem_rhs(EllipsoidParams(a, Rational(15000)));
    for (int x : {20000, 50000, 100000, 1000000}) {
      const auto cur = theorem_rhs(EllipsoidParams(a, Rational(x)));
      for (std::size_t i = 0; i < 6; ++i) EXPECT_GT(cur.terms[i], prev.terms[i]) << i << " " << x;
      prev = cur;
    }
  }
}

TEST(Series, AllEightConstantsCertified) {
  const auto certs = series_constants();
  ASSERT_EQ(certs.size(), 8u);
  const char* claimed[] = {"23.8", "27", "4", "1.4", "3.3", "8", "4.4", "5.7"};
  for (std::size_t i = 0; i < certs.size(); ++i) {
    EXPECT_EQ(certs[i].claimed, Real(claimed[i])) << certs[i].name;
    EXPECT_TRUE(certs[i].certified()) << certs[i].name << " slack " << certs[i].slack;
    EXPECT_GT(certs[i].head, 0);
    EXPECT_GE(certs[i].tail, 0);
  }
}

TEST(Series, LargerBoxTightensTheUpperBound) {
  const auto small = series_constants(60);
  const auto large = series_constants(200);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_LE(large[i].certified_upper, small[i].certified_upper + Real("1e-20"));
    EXPECT_GE(large[i].head, small[i].head);
  }
}

TEST(CheckTheorem, HoldsAtSmallestAdmissibleX) {
  const auto c = check_theorem(EllipsoidParams(Rational(1), Rational(15000)));
  ASSERT_TRUE(c.holds.has_value());
  EXPECT_TRUE(*c.holds);
  EXPECT_GT(c.margin, 0);
  ASSERT_TRUE(c.discrepancy.has_value());
  EXPECT_LT(abs(c.discrepancy->p_value), c.rhs.total);
}

TEST(CheckTheorem, HoldsForNonUnitA) {
  const auto c = check_theorem(EllipsoidParams(Rational(2), Rational(100000)));
  ASSERT_TRUE(c.holds.has_value());
  EXPECT_TRUE(*c.holds);
}

TEST(CheckTheorem, NoVerdictOutsideDomain) {
  const auto c = check_theorem(EllipsoidParams(Rational(1), Rational(100)));
  EXPECT_FALSE(c.rhs.valid());
  EXPECT_FALSE(c.holds.has_value());
  EXPECT_FALSE(c.discrepancy.has_value());
}
