// Poisson-summation side of the discrepancy estimate: the Fourier transform
// I(m, t) of the dilated ellipsoid's indicator and its second primitive,
// truncated Poisson sums for the smoothed discrepancy, and the exponential
// sums E_{N,M} together with the second-derivative (Van der Corput) apparatus.

#pragma once

#include "elat/ellipsoid.hpp"
#include "elat/numeric.hpp"

#include <array>
#include <complex>
#include <cstdint>

namespace elat::fourier {

/// Nonzero frequency m with g(m) = sqrt(a(m1^2+m2^2) + m3^2/a^2) and the
/// cylinder companion g*(m) = max(sqrt(a(m1^2+m2^2)), |m3|/a).
struct FourierIndex {
  std::array<std::int64_t, 3> m{};
  Rational a;
  Real g;
  Real g_star;

  FourierIndex(const std::array<std::int64_t, 3>& m, const Rational& a);
};

/// exp(2 pi i w) with w reduced modulo 1 at the working precision first.
std::complex<long double> unit_phase(const Real& w);
/// cos(2 pi w), sin(2 pi w) after the same reduction.
Real cos_2pi(const Real& w);
Real sin_2pi(const Real& w);

/// I(m, t) = int_{Q(u) <= t} e(m.u) du
///         = -sqrt(t) cos(2 pi g sqrt t) / (pi g^2) + sin(2 pi g sqrt t) / (2 pi^2 g^3).
Real i_closed(const Real& g, const Real& t);
Real i_closed(const FourierIndex& m, const Real& t);

/// Second primitive of I(m, .) from 0:
///   t^(3/2) cos / (pi^3 g^4) - 3 t sin / (pi^4 g^5)
///   - 15 sqrt(t) cos / (4 pi^5 g^6) + 15 sin / (8 pi^6 g^7).
Real i2_closed(const Real& g, const Real& t);
Real i2_closed(const FourierIndex& m, const Real& t);

/// Termwise absolute bounds (triangle inequality on the closed forms).
Real i_closed_bound(const Real& g, const Real& t);
Real i2_closed_bound(const Real& g, const Real& t);

struct PoissonPartial {
  Real partial;           // sum over 0 < g*(m) <= Z of D_{x,s}(I(m, .))
  Real tail;              // certified bound on the remaining terms
  Real rounding;          // allowance for working-precision rounding
  std::uint64_t indices = 0;
  Real lower() const { return partial - tail - rounding; }
  Real upper() const { return partial + tail + rounding; }
  Real width() const { return 2 * (tail + rounding); }
};

/// Truncated Poisson series for D_{x,+-u}(P). The tail bound applies the
/// g*-tail inequality at alpha = 4, 5, 6, 7 to the four terms of I_[2].
PoissonPartial poisson_d2_partial(const EllipsoidParams& p, const Rational& u, int sign,
                                  const Rational& z, std::uint64_t budget = kDefaultBudget);

/// f(n, m) = sqrt(a n + m^2 / a^2) = g(sqrt n, 0, m).
Real f_phase(const Real& n, const Real& m, const Rational& a);

struct ExpSumSpec {
  Real n_low;          // N
  Real m_low;          // M
  std::int64_t u = 0;  // U in [N, 2N]
  std::int64_t w = 0;  // W in [M, sqrt(2) M]
  Real t;
  Rational a;
  std::int64_t h_max = 0;  // Weyl shift length H

  /// Ranges as stated above; N, M >= 1 and t > 0.
  bool valid() const;
  /// m1^2 + m2^2 > 20, |m3| > 40 (so N >= 10, M >= 40/sqrt 2) and 10 <= H <= M/2.
  bool restricted() const;
};

/// E_{N,M}(U, W) = sum_{N < n <= U} r(n) sum_{M < m <= W} e(f(n, m) sqrt t).
std::complex<long double> exp_sum(const ExpSumSpec& spec);

/// Lambda = (3/4) h M sqrt(t) / (2aN + 2M^2/a^2)^(5/2) and 8 Lambda.
struct LambdaBounds {
  Real lambda;
  Real upper;
};
LambdaBounds lambda_bounds(std::int64_t h, const Real& n_low, const Real& m_low, const Real& t,
                           const Rational& a);

/// F(tau) = (f(tau, m+h) - f(tau, m)) sqrt t, evaluated without cancellation.
Real weyl_phase(const Real& tau, const Real& m, std::int64_t h, const Real& t,
                const Rational& a);
/// F''(tau) = sqrt(t) a^2 / 4 ((a tau + m^2/a^2)^(-3/2) - (a tau + (m+h)^2/a^2)^(-3/2)).
Real weyl_phase_second_derivative(const Real& tau, const Real& m, std::int64_t h,
                                  const Real& t, const Rational& a);
/// The same through (3/4) sqrt(t) int_m^{m+h} xi / (a tau + xi^2/a^2)^(5/2) d xi.
double weyl_phase_second_derivative_integral(double tau, double m, std::int64_t h, double t,
                                             double a);

struct VdcCheck {
  long double lhs = 0;  // |sum_{N < n <= U} e(F(n))|
  Real rhs;             // 40 (U - N) sqrt(Lambda) + 11 / sqrt(Lambda)
  Real lambda;
  bool holds() const { return Real(lhs) <= rhs; }
};

/// Requires h >= 1 and m, m + h in [M, W].
VdcCheck vdc_check(const ExpSumSpec& spec, std::int64_t h, std::int64_t m);

enum class WeylCase { I, II, III };

struct WeylChoice {
  Real expression;  // 0.1 M^(-1/3) f^(5/3) t^(-1/6)
  Integer h;        // floor of the expression
  WeylCase kind;
};

/// Case I when 10 <= H <= M/2; otherwise II when the expression exceeds M/2,
/// otherwise III (expression below 10).
WeylChoice classify_weyl(const Real& expression, const Real& m_low);
WeylChoice weyl_h(const Real& m_low, const Real& f, const Real& t);

struct PartialSummationCheck {
  long double s_abs = 0;   // |S^[j](N, M)|
  long double sup_e = 0;   // sup over integer cut points of |E_{N,M}(U, W)|
  Real bound;              // 4 sup|E| / f^j(N, M)
  bool holds() const { return Real(s_abs) <= bound; }
};

/// Empirical check of |S^[j](N, M)| <= 4 f(N, M)^-j sup |E_{N,M}|.
PartialSummationCheck partial_summation_check(const Real& n_low, const Real& m_low, int j,
                                              const Real& t, const Rational& a);

}  // namespace elat::fourier
