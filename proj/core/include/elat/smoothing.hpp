// Second iterated-integral smoothing:
//
//   F_[2](t) = int_0^t int_0^t1 F(t2) dt2 dt1,
//   D_{x,u}(F) = F_[2](x+2u) - 2 F_[2](x+u) + F_[2](x)
//              = int_x^{x+u} int_t1^{t1+u} F(t2) dt2 dt1,
//
// applied to the ellipsoid volume V(t) = (4 pi / 3) t^(3/2) in closed form and
// to the lattice counting function A(t) exactly.

#pragma once

#include "elat/ellipsoid.hpp"
#include "elat/numeric.hpp"

#include <functional>
#include <span>
#include <stdexcept>

namespace elat::smoothing {

/// Offset x +- u of the smoothing window, with |u| <= x/3.
struct SmoothingParams {
  Rational x;
  Rational u;
  int sign = 1;

  SmoothingParams(Rational x, Rational u, int sign);
  Rational offset() const { return sign * u; }
};

/// phi(w) = (1+2w)^(7/2) - 2(1+w)^(7/2) + 1, w >= -1/2.
Real phi(const Real& w);
Real phi_third_derivative(const Real& w);
Real phi_fourth_derivative(const Real& w);

/// M3 = max_{|v| <= 1/3} |phi'''(v)|, the constant produced by
/// tools/derive_m3.py (attained at v = 1/3).
Real phi_third_derivative_max();

struct ExtremumSearch {
  Real value;
  Real argmax;
  bool monotone = false;  // phi'''' > 0 on every grid point
};

/// Dense-grid search with successive refinement; independent of the stored M3.
ExtremumSearch phi_third_derivative_max_search(unsigned grid_points = 2049,
                                               unsigned rounds = 8);

struct TaylorDefect {
  Real defect;  // |phi(w) - (35/4) w^2|
  Real bound;   // |w|^3 / 6 * M3
  bool holds() const { return defect <= bound; }
};

/// Requires |w| <= 1/3.
TaylorDefect phi_taylor_defect(const Real& w);

/// (8 pi / 315) M3, the constant in |u^-2 D_{x,u}(V) - V(x)| <= c x^(1/2) |u|.
Real volume_smoothing_constant();

/// D_{x,offset}(V) = (4 pi / 3)(4 x^(7/2) / 35) phi(offset / x); |offset| <= x/3.
Real d2_volume(const Real& x, const Real& offset);
Real d2_volume(const Real& x, const Real& u, int sign);

/// The second-difference form, for any primitive F_[2].
template <class T, class Primitive>
T d2_from_primitive(Primitive&& f2, const T& x, const T& offset) {
  return f2(x + 2 * offset) - 2 * f2(x + offset) + f2(x);
}

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Nested adaptive Gauss-Kronrod evaluation of the double-integral form.
/// `breakpoints` are jump locations of F; both levels are split there.
/// Any finite window is accepted; F must be defined on [x, x + 2u].
double d2_generic(const std::function<double(double)>& f, double x, double offset,
                  std::span<const double> breakpoints = {}, double abs_tol = 1e-9);

/// D_{x,offset} of the unit step 1[t >= q]:
/// ((x+2s-q)_+^2 - 2(x+s-q)_+^2 + (x-q)_+^2) / 2.
Rational d2_step_kernel(const Rational& q, const Rational& x, const Rational& offset);

/// Exact D_{x,+-u}(A) for A(t) = #{m : Q(m) <= t}. Points with
/// Q(m) <= min(x, x+2s) contribute s^2 each; the shell up to max(x, x+2s)
/// contributes its step kernels. Throws BudgetExceeded if the shell holds
/// more than `budget` points.
Rational d2_count_exact(const EllipsoidParams& p, const Rational& u, int sign,
                        std::uint64_t budget = kDefaultBudget);

}  // namespace elat::smoothing
