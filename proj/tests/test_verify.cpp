#include "elat/verify.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace elat;
using namespace elat::verify;

namespace {

void expect_all_pass(const Report& r) {
  EXPECT_FALSE(r.checks.empty());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << r.suite << ": " << c.name << " at " << c.witness;
  EXPECT_TRUE(r.passed());
}

}  // namespace

TEST(Suites, Lemma1Small) { expect_all_pass(lemma1(2000)); }

TEST(Suites, Lemma2Small) { expect_all_pass(lemma2(200)); }

TEST(Suites, Series) { expect_all_pass(series()); }

TEST(Suites, VdcFewDraws) { expect_all_pass(vdc(10, 7)); }

TEST(Suites, ReportPrintsEveryCheck) {
  const auto r = series();
  std::ostringstream os;
  r.print(os);
  for (const auto& c : r.checks) EXPECT_NE(os.str().find(c.name), std::string::npos);
}

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(run_suite("lemma9", 0, kDefaultBudget), UnknownSuite);
}

TEST(Suites, BudgetPropagates) {
  EXPECT_THROW(run_suite("lemma2", 10, 5), BudgetExceeded);
}
