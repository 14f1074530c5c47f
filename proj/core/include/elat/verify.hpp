// Verification suites. Each check reports the extremal case it found so that
// a failing constant can be diagnosed from the report alone.

#pragma once

#include "elat/numeric.hpp"

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace elat::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::uint64_t cases = 0;
  std::string witness;  // where the inequality is tightest (or first fails)
  std::string slack;    // bound minus value at the witness
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;
  bool passed() const;
  void print(std::ostream& os) const;
};

class UnknownSuite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::array<std::string_view, 6> kSuites{"lemma1", "lemma2",    "series",
                                                         "fourier", "smoothing", "vdc"};

/// r(n) sums: arg-max ratios, R1 <= 4x up to 10 limit, R12 <= 4.8x,
/// r^2 <= r*r and R2 <= 19.2 x log(2 e^2 x) up to limit.
Report lemma1(std::uint64_t limit = 100'000);

/// R3* <= 14 x^(3/2) on half-integers up to limit, and the g*-sum
/// inequalities on a in {1/4, 1/2, 1, 2, 4}, Z in {1, 2, 5, 10, 20}, alpha in {4, 5, 7}.
Report lemma2(std::uint64_t limit = 10'000, std::uint64_t budget = kDefaultBudget);

/// The eight double-series constants.
Report series();

/// Closed forms against quadrature oracles, index invariants, Poisson bands.
Report fourier(std::uint64_t budget = kDefaultBudget);

/// M3, the volume constant, Taylor defects, smoothing identities, sandwiches.
Report smoothing(std::uint64_t budget = kDefaultBudget);

/// Seeded random draws of the second-derivative test, curvature containment
/// and the partial-summation reduction.
Report vdc(std::uint64_t draws = 100, std::uint64_t seed = 20240521);

/// Dispatch by name; limit 0 selects the suite default. Throws UnknownSuite.
Report run_suite(std::string_view name, std::uint64_t limit, std::uint64_t budget);

}  // namespace elat::verify
