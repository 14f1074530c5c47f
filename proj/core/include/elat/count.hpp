// Exact lattice-point counts in the dilated ellipsoid Q(u) <= x and the
// discrepancy P(x) = N(x) - (4 pi / 3) x^(3/2).
//
// The count runs slice by slice over u3. With a = p/q and x = X/D the
// membership test (u1^2 + u2^2)/a + a^2 u3^2 <= x is the integer inequality
//
//     q^3 D (u1^2 + u2^2) + p^3 D u3^2 <= p q^2 X,
//
// so every slice is a disc u1^2 + u2^2 <= T(u3) with an exact integer T.
// Slices are independent and are summed by a worker pool; integer addition
// makes the result independent of scheduling.

#pragma once

#include "elat/ellipsoid.hpp"
#include "elat/numeric.hpp"

#include <cstdint>

namespace elat::count {

struct CountOptions {
  unsigned threads = 0;                  // 0: hardware concurrency
  std::uint64_t budget = kDefaultBudget;  // disc rows visited
};

/// #{(u1, u2) in Z^2 : u1^2 + u2^2 <= n}.
std::uint64_t disc_count(std::uint64_t n);

/// #{(u1, u2) in Z^2 : u1^2 + u2^2 <= T} for rational T >= 0.
Integer disc_count(const Rational& t);

using elat::isqrt_rational_floor;

/// Disc rows the slice counter visits for p; this is what the budget limits.
Integer count_work(const EllipsoidParams& p);

/// #{u in Z^3 : (u1^2 + u2^2)/a + a^2 u3^2 <= x}. Throws BudgetExceeded.
Integer lattice_count(const EllipsoidParams& p, const CountOptions& options = {});

/// (4 pi / 3) x^(3/2) at the working precision.
Real volume(const Rational& x);
Real volume(const Real& x);

struct DiscrepancyResult {
  Integer n_count;
  Real volume;
  Real p_value;
};

DiscrepancyResult discrepancy(const EllipsoidParams& p, const CountOptions& options = {});

}  // namespace elat::count
