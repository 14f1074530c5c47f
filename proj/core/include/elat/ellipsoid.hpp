// The rotational ellipsoid (u1^2 + u2^2)/a + a^2 u3^2 <= x and the
// parameters derived from (a, x) alone.

#pragma once

#include "elat/numeric.hpp"

#include <string_view>

namespace elat {

struct EllipsoidParams {
  Rational a;
  Rational x;

  /// Throws DomainError unless a > 0 and x > 0.
  EllipsoidParams(Rational a, Rational x);

  static EllipsoidParams parse(std::string_view a, std::string_view x);

  /// 1/x <= a <= x and x >= 15000, decided exactly.
  bool precond_28() const;
  /// 1 <= y <= x/3 with y the smoothing length below.
  bool precond_27() const;
};

/// log(100 x) + |log a|.
Real l_factor(const Real& a, const Real& x);
Real l_factor(const EllipsoidParams& p);

/// Smoothing length y = 73.6 a^(1/8) x^(3/16) L^(3/8).
Real smoothing_y(const EllipsoidParams& p);

/// Poisson cut z = 0.3852 sqrt(x + 2y) / y.
Real poisson_cut_z(const EllipsoidParams& p);

}  // namespace elat
