#include "elat/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace elat::arith {

std::uint64_t r2(std::uint64_t n) {
  const std::uint64_t s = isqrt_u64(n);
  std::uint64_t count = 0;
  for (std::uint64_t u = 0; u <= s; ++u) {
    const std::uint64_t rest = n - u * u;
    const std::uint64_t v = isqrt_u64(rest);
    if (v * v != rest) continue;
    const std::uint64_t signs_u = u == 0 ? 1 : 2;
    const std::uint64_t signs_v = v == 0 ? 1 : 2;
    count += signs_u * signs_v;
  }
  return count;
}

RnTable::RnTable(std::uint64_t limit)
    : limit_(limit), values_(limit + 1, 0), prefix_(limit + 1), prefix_sq_(limit + 1) {
  const std::uint64_t s = isqrt_u64(limit);
  for (std::uint64_t u = 0; u <= s; ++u) {
    const std::uint64_t uu = u * u;
    const std::uint32_t mu = u == 0 ? 1 : 2;
    const std::uint64_t vmax = isqrt_u64(limit - uu);
    values_[uu] += mu;
    for (std::uint64_t v = 1; v <= vmax; ++v) values_[uu + v * v] += 2 * mu;
  }
  std::uint64_t acc = 0;
  std::uint64_t acc_sq = 0;
  for (std::uint64_t n = 0; n <= limit; ++n) {
    acc += values_[n];
    if (n > 0) acc_sq += std::uint64_t{values_[n]} * values_[n];
    prefix_[n] = acc;
    prefix_sq_[n] = acc_sq;
  }
}

std::uint64_t RnTable::checked_index(const Integer& n) const {
  if (n < 0) return 0;
  if (!fits_u64(n) || to_u64(n) > limit_) {
    throw DomainError("argument beyond r(n) table limit " + std::to_string(limit_));
  }
  return to_u64(n);
}

std::uint64_t RnTable::big_r1(const Rational& x) const {
  if (x < 1) return 0;
  return prefix_[checked_index(floor(x))] - 1;
}

std::uint64_t RnTable::big_r12(const Rational& x) const {
  if (x <= 0) throw DomainError("R_{1,2}(x) requires x > 0");
  const std::uint64_t hi = checked_index(floor(2 * x));
  const std::uint64_t lo = checked_index(floor(x));
  return prefix_[hi] - prefix_[lo];
}

std::uint64_t RnTable::big_r2(const Rational& x) const {
  if (x < 1) throw DomainError("R_2(x) requires x >= 1");
  const std::uint64_t hi = checked_index(floor(2 * x));
  const std::uint64_t lo = checked_index(floor(x));
  return prefix_sq_[hi] - prefix_sq_[lo];
}

std::uint64_t RnTable::conv_r(std::uint64_t n) const {
  if (n == 0) throw DomainError("conv_r requires n >= 1");
  if (n > limit_) throw DomainError("conv_r argument beyond table limit");
  std::uint64_t total = 0;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    const std::uint64_t e = n / d;
    const std::uint64_t term = std::uint64_t{values_[d]} * values_[e];
    total += d == e ? term : 2 * term;
  }
  return total;
}

std::shared_ptr<const RnTable> shared_table(std::uint64_t limit) {
  static std::mutex mutex;
  static std::shared_ptr<const RnTable> table;
  std::lock_guard lock(mutex);
  if (!table || table->limit() < limit) {
    std::uint64_t grow = table ? table->limit() + table->limit() / 2 : 0;
    table = std::make_shared<const RnTable>(std::max({limit, grow, std::uint64_t{1024}}));
  }
  return table;
}

namespace {

std::uint64_t table_need(const Rational& x) {
  if (x <= 0) return 0;
  return to_u64(floor(x));
}

}  // namespace

std::uint64_t big_r1(const Rational& x) { return shared_table(table_need(x))->big_r1(x); }
std::uint64_t big_r12(const Rational& x) {
  return shared_table(table_need(2 * x))->big_r12(x);
}
std::uint64_t big_r2(const Rational& x) {
  return shared_table(table_need(2 * x))->big_r2(x);
}
std::uint64_t conv_r(std::uint64_t n) { return shared_table(n)->conv_r(n); }

std::vector<std::uint64_t> conv_table(const RnTable& table, std::uint64_t limit) {
  if (limit > table.limit()) throw DomainError("conv_table beyond r(n) table limit");
  std::vector<std::uint64_t> out(limit + 1, 0);
  for (std::uint64_t d = 1; d <= limit; ++d) {
    const std::uint64_t rd = table[d];
    if (rd == 0) continue;
    for (std::uint64_t e = 1; d * e <= limit; ++e) out[d * e] += rd * table[e];
  }
  return out;
}

CylinderNormIndex::CylinderNormIndex(const std::array<std::int64_t, 3>& idx) : m(idx) {
  const auto sq = [](std::int64_t v) { return static_cast<std::uint64_t>(v * v); };
  norm_sq = std::max(sq(m[0]) + sq(m[1]), sq(m[2]));
}

Integer r3_star(const Rational& x) {
  if (x <= 0) throw DomainError("R_3^*(x) requires x > 0");
  const std::uint64_t n = to_u64(floor(x));
  const auto table = shared_table(n);
  // |m|_*^2 <= x splits into m1^2 + m2^2 <= x and m3^2 <= x independently
  const Integer disc = table->prefix(n);
  const Integer column = 2 * isqrt_rational_floor(x) + 1;
  return disc * column - 1;
}

Real g0(const Rational& a) {
  if (a <= 0) throw DomainError("g0 requires a > 0");
  const Real ar = to_real(a);
  return boost::multiprecision::min(Real(sqrt(ar)), Real(1 / ar));
}

long double g0_ld(const Rational& a) {
  if (a <= 0) throw DomainError("g0 requires a > 0");
  const long double ar = static_cast<long double>(to_real(a));
  return std::min(std::sqrt(ar), 1.0L / ar);
}

GStarSum gstar_power_sum(const Rational& a, long double alpha, const Rational& lo,
                         const Rational& hi, std::uint64_t budget) {
  if (a <= 0) throw DomainError("gstar sum requires a > 0");
  if (lo < 0 || hi <= 0) throw DomainError("gstar sum range must be nonnegative");
  GStarSum out;
  if (lo >= hi) return out;

  const Rational hi_sq = hi * hi;
  const Integer n_max_z = floor(hi_sq / a);      // a n <= hi^2
  const Integer k_max_z = floor(a * hi);          // |m3| / a <= hi
  const Integer k_lo_z = floor(a * lo);           // |m3| / a > lo  iff  |m3| > k_lo
  // work is one closed-form row per n plus the column prefix table
  const Integer work = n_max_z + 1 + k_max_z;
  if (!fits_u64(work) || to_u64(work) > budget) {
    throw BudgetExceeded(fits_u64(work) ? to_u64(work)
                                        : std::numeric_limits<std::uint64_t>::max(),
                         budget);
  }
  const std::uint64_t n_max = to_u64(n_max_z);
  const std::uint64_t k_max = to_u64(k_max_z);
  const std::uint64_t k_lo = to_u64(k_lo_z);
  const auto table = shared_table(n_max);

  const Integer points_z = Integer(table->prefix(n_max)) * (2 * k_max + 1) - 1;
  out.points = fits_u64(points_z) ? to_u64(points_z) : std::numeric_limits<std::uint64_t>::max();

  // P[k] = sum_{j <= k} j^-alpha
  std::vector<long double> column(k_max + 1, 0.0L);
  for (std::uint64_t j = 1; j <= k_max; ++j) {
    column[j] = column[j - 1] + std::pow(static_cast<long double>(j), -alpha);
  }
  const long double a_ld = static_cast<long double>(to_real(a));
  const long double a_pow = std::pow(a_ld, alpha);
  const Rational a_cubed = a * a * a;
  const Rational lo_sq = lo * lo;

  long double total = 0.0L;
  std::uint64_t ops = k_max;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const std::uint64_t rn = (*table)[n];
    if (rn == 0) continue;
    ++ops;
    // |m3| <= k_n  iff  |m3| / a <= sqrt(a n), so g* = sqrt(a n) there
    const std::uint64_t k_n = to_u64(isqrt_rational_floor(a_cubed * n));
    const std::uint64_t k_flat = std::min(k_n, k_max);
    if (n > 0 && a * n > lo_sq) {
      const long double gn = std::sqrt(a_ld * static_cast<long double>(n));
      total += static_cast<long double>(rn) * static_cast<long double>(2 * k_flat + 1) *
               std::pow(gn, -alpha);
    }
    const std::uint64_t start = std::max(k_n, k_lo);
    if (start < k_max) {
      total += static_cast<long double>(rn) * 2.0L * a_pow * (column[k_max] - column[start]);
    }
  }
  out.value = total;
  out.rounding = total * std::numeric_limits<long double>::epsilon() *
                 (8.0L * static_cast<long double>(ops) + 64.0L);
  return out;
}

GStarSum gstar_sum_inner(const Rational& z, const Rational& a, std::uint64_t budget) {
  if (z <= 0) throw DomainError("gstar_sum_inner requires Z > 0");
  return gstar_power_sum(a, 3.0L, Rational(0), z, budget);
}

long double gstar_inner_bound(const Rational& z, const Rational& a) {
  const long double g = g0_ld(a);
  const long double zz = static_cast<long double>(to_real(z));
  const long double lg = std::log(1.4L * zz / g);
  return 42.0L / (g * g * g) * std::max(lg, 0.0L);
}

long double gstar_tail_bound(const Rational& z, long double alpha, const Rational& a) {
  if (alpha <= 3) throw DomainError("tail bound requires alpha > 3");
  if (z <= 0) throw DomainError("tail bound requires Z > 0");
  const long double g = g0_ld(a);
  const long double zz = static_cast<long double>(to_real(z));
  return 14.0L * alpha / ((alpha - 3.0L) * g * g * g) * std::pow(zz, 3.0L - alpha);
}

GStarTail gstar_sum_tail(const Rational& z, long double alpha, const Rational& a,
                         const Rational& z_max, std::uint64_t budget) {
  if (alpha <= 3) throw DomainError("tail sum requires alpha > 3");
  if (z <= 0) throw DomainError("tail sum requires Z > 0");
  if (z >= z_max) throw DomainError("tail sum requires Z < Z_max");
  GStarTail out;
  out.enumerated = gstar_power_sum(a, alpha, z, z_max, budget);
  out.remainder = gstar_tail_bound(z_max, alpha, a);
  out.bound = gstar_tail_bound(z, alpha, a);
  return out;
}

GStarTail gstar_sum_tail(const Rational& z, long double alpha, const Rational& a,
                         std::uint64_t budget) {
  return gstar_sum_tail(z, alpha, a, 20 * z, budget);
}

}  // namespace elat::arith
