// The explicit discrepancy bound: six term groups in a, x and
// L = log(100x) + |log a|, the parameters y, z, alpha0, g0, and certificates
// for the numerical double-series constants used to derive it.

#pragma once

#include "elat/count.hpp"
#include "elat/ellipsoid.hpp"
#include "elat/numeric.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace elat::bound {

inline constexpr std::array<std::string_view, 6> kTermNames{"t1", "t2", "t3", "t4", "t5", "t6"};

struct BoundBreakdown {
  Real l_factor;
  Real y;
  Real z;
  Real alpha0;  // max(a, 1/sqrt a)
  Real g0;      // 1 / alpha0
  //   t1 = 1237 a^(1/8) x^(11/16) L^(3/8)
  //   t2 = 12 a^(-69/64) x^(81/128) L^(145/64)
  //   t3 = (a^(1/4)(134 L^(5/2) + 543 L^(1/4)) + 20 L^(5/2) / a^(1/4)) x^(5/8)
  //   t4 = 12 a^(-39/64) x^(75/128) L^(139/64)
  //   t5 = (268 L / a + 159 alpha0^3 + 2000) x^(1/2)
  //   t6 = alpha0^3 (4.4 L + 104.5)
  std::array<Real, 6> terms;
  Real total;
  bool precond_27 = false;
  bool precond_28 = false;
  bool valid() const { return precond_27; }
};

struct YZ {
  Real y;
  Real z;
  bool precond_27 = false;
  bool precond_28 = false;
};

YZ params_yz(const EllipsoidParams& p);

/// All terms are evaluated even when the precondition fails; `valid()` flags it.
BoundBreakdown theorem_rhs(const EllipsoidParams& p);

struct TheoremCheck {
  BoundBreakdown rhs;
  std::optional<count::DiscrepancyResult> discrepancy;  // absent when invalid
  std::optional<bool> holds;                            // absent when invalid
  Real margin;                                          // rhs.total - |P|
};

/// Counts only when the precondition holds. Throws BudgetExceeded.
TheoremCheck check_theorem(const EllipsoidParams& p, const count::CountOptions& options = {});

struct SeriesCertificate {
  std::string name;
  Real claimed;
  Real head;             // exact-summand sum over the truncation box
  Real tail;             // analytic bound on the rest
  Real rounding;         // allowance for working-precision rounding of the head
  Real certified_upper;  // head + tail + rounding
  std::optional<Real> majorant;  // closed-form geometric majorant, where one is printed
  Real slack;            // claimed - max(certified_upper, majorant)
  bool certified() const { return slack > 0; }
};

/// Truncation box half-width for the head sums.
inline constexpr int kSeriesCut = 200;

/// The two full series over r, s >= 0 followed by the six region sums over
/// min(r, s) <= 0, in the order 23.8, 27, 4, 1.4, 3.3, 8, 4.4, 5.7.
std::vector<SeriesCertificate> series_constants(int cut = kSeriesCut);

}  // namespace elat::bound
