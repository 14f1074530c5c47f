// Sum-of-two-squares function r(n), its cumulative sums, and the
// cylinder-norm counts used to control the Poisson series.

#pragma once

#include "elat/numeric.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace elat::arith {

/// r(n) by direct enumeration over |u| <= sqrt(n). Reference path.
std::uint64_t r2(std::uint64_t n);

/// Table of r(n) for 0 <= n <= limit, filled by sieving representations
/// u^2 + v^2 (u, v >= 0) with their sign multiplicities. Immutable once built.
class RnTable {
 public:
  explicit RnTable(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t operator[](std::uint64_t n) const { return values_[n]; }
  std::span<const std::uint32_t> values() const { return values_; }

  /// sum_{0 <= k <= n} r(k), including the origin term r(0) = 1.
  std::uint64_t prefix(std::uint64_t n) const { return prefix_[n]; }
  /// sum_{1 <= k <= n} r(k)^2.
  std::uint64_t prefix_sq(std::uint64_t n) const { return prefix_sq_[n]; }

  /// R_1(x) = sum_{1 <= n <= x} r(n).
  std::uint64_t big_r1(const Rational& x) const;
  /// R_{1,2}(x) = sum_{x < n <= 2x} r(n).
  std::uint64_t big_r12(const Rational& x) const;
  /// R_2(x) = sum_{x < n <= 2x} r(n)^2; requires x >= 1.
  std::uint64_t big_r2(const Rational& x) const;
  /// sum_{d | n} r(d) r(n/d), n >= 1.
  std::uint64_t conv_r(std::uint64_t n) const;

 private:
  std::uint64_t checked_index(const Integer& n) const;

  std::uint64_t limit_;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint64_t> prefix_;
  std::vector<std::uint64_t> prefix_sq_;
};

/// Process-wide table covering at least [0, limit]; rebuilt larger on demand
/// under a lock, then shared read-only.
std::shared_ptr<const RnTable> shared_table(std::uint64_t limit);

/// Free-function forms; each pulls a large-enough shared table.
std::uint64_t big_r1(const Rational& x);
std::uint64_t big_r12(const Rational& x);
std::uint64_t big_r2(const Rational& x);
std::uint64_t conv_r(std::uint64_t n);

/// sum_{d | n} r(d) r(n/d) for every n <= limit, by a divisor sieve.
std::vector<std::uint64_t> conv_table(const RnTable& table, std::uint64_t limit);

/// Cylinder norm squared max(m1^2 + m2^2, m3^2).
struct CylinderNormIndex {
  std::array<std::int64_t, 3> m{};
  std::uint64_t norm_sq = 0;

  explicit CylinderNormIndex(const std::array<std::int64_t, 3>& m);
};

/// R_3^*(x) = #{m in Z^3 : 0 < |m|_*^2 <= x}.
Integer r3_star(const Rational& x);

/// g_0 = min(sqrt(a), 1/a).
Real g0(const Rational& a);
long double g0_ld(const Rational& a);

/// Result of a sum of g*(m)^-alpha with its floating-point rounding allowance.
struct GStarSum {
  long double value = 0;
  long double rounding = 0;   // absolute bound on accumulated rounding error
  std::uint64_t points = 0;   // lattice points visited
  long double upper() const { return value + rounding; }
};

/// sum over lo < g*(m) <= hi of g*(m)^-alpha, with g*(m) = max(sqrt(a(m1^2+m2^2)),
/// |m3|/a). `lo` == 0 means all nonzero m. Exact rational range predicates.
/// Each n is one closed-form row, so `budget` limits rows plus column entries.
GStarSum gstar_power_sum(const Rational& a, long double alpha, const Rational& lo,
                         const Rational& hi, std::uint64_t budget = kDefaultBudget);

/// sum_{0 < g*(m) <= Z} g*(m)^-3; zero when Z < g_0.
GStarSum gstar_sum_inner(const Rational& z, const Rational& a,
                         std::uint64_t budget = kDefaultBudget);

/// Right side (42/g0^3) log_+(1.4 Z/g0) of the inner-sum inequality.
long double gstar_inner_bound(const Rational& z, const Rational& a);

/// Right side 14 alpha / ((alpha - 3) g0^3) Z^(3 - alpha) of the tail inequality.
long double gstar_tail_bound(const Rational& z, long double alpha, const Rational& a);

struct GStarTail {
  GStarSum enumerated;     // Z < g* <= Z_max
  long double remainder;   // tail bound applied at Z_max
  long double bound;       // tail bound at Z
  bool certified() const { return enumerated.upper() + remainder <= bound; }
};

/// Head-plus-remainder certification of the tail inequality at Z.
/// Requires alpha > 3 and 0 < Z < Z_max.
GStarTail gstar_sum_tail(const Rational& z, long double alpha, const Rational& a,
                         const Rational& z_max, std::uint64_t budget = kDefaultBudget);

/// Same with the default split Z_max = 20 Z.
GStarTail gstar_sum_tail(const Rational& z, long double alpha, const Rational& a,
                         std::uint64_t budget = kDefaultBudget);

}  // namespace elat::arith
