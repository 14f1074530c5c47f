// Independent reference computations. Each one takes a different route from
// the production path so that agreement is evidence rather than tautology.

#pragma once

#include "elat/ellipsoid.hpp"
#include "elat/numeric.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace elat::crosscheck {

/// Triple loop over a bounding box with the cleared-denominator predicate.
Integer brute_lattice_count(const EllipsoidParams& p);

/// Double loop over [-sqrt T, sqrt T]^2.
std::uint64_t brute_disc_count(std::uint64_t t);

/// #{m != 0 : max(m1^2 + m2^2, m3^2) <= x} by a triple loop.
std::uint64_t brute_r3_star(const Rational& x);

/// sum over lo < g*(m) <= hi of g*(m)^-alpha by a triple loop (hi^2 / a and
/// a hi must stay small). Range membership is decided exactly.
long double brute_gstar_sum(const Rational& a, long double alpha, const Rational& lo,
                            const Rational& hi);

/// I(m, t) by mapping the ellipsoid to the unit ball: the transform depends
/// on m only through g, and the ball reduces to a 1-D integral
/// t^(3/2) int_{-1}^{1} cos(2 pi g sqrt(t) v) pi (1 - v^2) dv.
double i_ball_quadrature(double g, double t);

/// I(m, t) slice by slice along u3 with the disc transform
/// int_{|w| <= R} e(k.w) dw = R J1(2 pi k R) / k, R^2 = a (t - a^2 u3^2).
double i_cylinder_quadrature(const std::array<std::int64_t, 3>& m, double a, double t);

/// int_0^t int_0^t1 f(t2) dt2 dt1 by nested adaptive quadrature, both levels in
/// the variable sqrt(t).
double twice_iterated(const std::function<double(double)>& f, double t);

/// F''(tau) by a central second difference at working precision.
Real weyl_phase_second_difference(const Real& tau, const Real& m, std::int64_t h,
                                  const Real& t, const Rational& a, const Real& step);

/// Sorted distinct values q = Q(m) <= t_max with their multiplicities,
/// by brute enumeration. A(t) is the running total.
std::vector<std::pair<Rational, std::uint64_t>> counting_steps(const Rational& a,
                                                               const Rational& t_max);

/// A(t) from `counting_steps`.
std::uint64_t counting_function(const std::vector<std::pair<Rational, std::uint64_t>>& steps,
                                double t);

}  // namespace elat::crosscheck
