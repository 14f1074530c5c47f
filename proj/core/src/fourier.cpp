#include "elat/fourier.hpp"

#include "elat/arith.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace elat::fourier {

namespace {

Real frac(const Real& w) { return w - floor(w); }

Real g_of(const Rational& a, const Integer& planar, const Integer& axial) {
  // g^2 = a (m1^2 + m2^2) + m3^2 / a^2, formed exactly before the square root
  const Rational g_sq = a * planar + Rational(axial * axial) / (a * a);
  return sqrt(to_real(g_sq));
}

}  // namespace

FourierIndex::FourierIndex(const std::array<std::int64_t, 3>& idx, const Rational& a_in)
    : m(idx), a(a_in) {
  if (m[0] == 0 && m[1] == 0 && m[2] == 0) throw DomainError("Fourier index must be nonzero");
  if (a <= 0) throw DomainError("Fourier index requires a > 0");
  const Integer planar = Integer(m[0]) * m[0] + Integer(m[1]) * m[1];
  const Integer axial = m[2];
  g = g_of(a, planar, axial);
  const Real radial = sqrt(to_real(Rational(a * planar)));
  const Real vertical = abs(to_real(Integer(axial))) / to_real(a);
  g_star = boost::multiprecision::max(radial, vertical);
}

Real cos_2pi(const Real& w) { return cos(2 * pi() * frac(w)); }
Real sin_2pi(const Real& w) { return sin(2 * pi() * frac(w)); }

std::complex<long double> unit_phase(const Real& w) {
  const Real angle = 2 * pi() * frac(w);
  return {static_cast<long double>(cos(angle)), static_cast<long double>(sin(angle))};
}

Real i_closed(const Real& g, const Real& t) {
  if (g <= 0 || t <= 0) throw DomainError("I(m, t) requires g > 0 and t > 0");
  const Real st = sqrt(t);
  const Real w = g * st;
  const Real p = pi();
  return -st * cos_2pi(w) / (p * g * g) + sin_2pi(w) / (2 * p * p * g * g * g);
}

Real i_closed(const FourierIndex& m, const Real& t) { return i_closed(m.g, t); }

Real i2_closed(const Real& g, const Real& t) {
  if (g <= 0 || t <= 0) throw DomainError("I_[2](m, t) requires g > 0 and t > 0");
  const Real st = sqrt(t);
  const Real w = g * st;
  const Real c = cos_2pi(w);
  const Real s = sin_2pi(w);
  const Real p = pi();
  const Real pg = p * g;
  const Real pg3 = pg * pg * pg;
  return t * st * c / (pg3 * g) - 3 * t * s / (pg3 * pg * g) -
         15 * st * c / (4 * pg3 * pg * pg * g) + 15 * s / (8 * pg3 * pg3 * g);
}

Real i2_closed(const FourierIndex& m, const Real& t) { return i2_closed(m.g, t); }

Real i_closed_bound(const Real& g, const Real& t) {
  const Real p = pi();
  return sqrt(t) / (p * g * g) + 1 / (2 * p * p * g * g * g);
}

Real i2_closed_bound(const Real& g, const Real& t) {
  const Real p = pi();
  const Real st = sqrt(t);
  return t * st / (pow(p, 3) * pow(g, 4)) + 3 * t / (pow(p, 4) * pow(g, 5)) +
         15 * st / (4 * pow(p, 5) * pow(g, 6)) + 15 / (8 * pow(p, 6) * pow(g, 7));
}

PoissonPartial poisson_d2_partial(const EllipsoidParams& p, const Rational& u, int sign,
                                  const Rational& z, std::uint64_t budget) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (u < 0 || 3 * u > p.x) throw DomainError("Poisson window requires 0 <= u <= x/3");
  if (z <= 0) throw DomainError("Poisson cut requires Z > 0");
  const Rational& a = p.a;
  const Rational s = sign * u;
  const std::array<Real, 3> ts{to_real(p.x), to_real(Rational(p.x + s)),
                               to_real(Rational(p.x + 2 * s))};
  const std::array<int, 3> weights{1, -2, 1};

  PoissonPartial out;
  out.partial = 0;
  Real largest = 0;

  const std::uint64_t n_max = to_u64(floor(z * z / a));
  const std::uint64_t k_max = to_u64(floor(a * z));
  const auto table = arith::shared_table(n_max);
  const Integer points = Integer(table->prefix(n_max)) * (2 * k_max + 1) - 1;
  if (!fits_u64(points) || to_u64(points) > budget) {
    throw BudgetExceeded(fits_u64(points) ? to_u64(points) : ~std::uint64_t{0}, budget);
  }
  out.indices = to_u64(points);

  if (s != 0) {
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      const std::uint32_t rn = (*table)[n];
      if (rn == 0) continue;
      for (std::uint64_t k = n == 0 ? 1 : 0; k <= k_max; ++k) {
        const Real g = g_of(a, Integer(n), Integer(k));
        Real term = 0;
        for (std::size_t i = 0; i < ts.size(); ++i) term += weights[i] * i2_closed(g, ts[i]);
        term *= rn * (k == 0 ? 1u : 2u);
        largest = boost::multiprecision::max(largest, Real(abs(term)));
        out.partial += term;
      }
    }
  }

  // tail: |D(I)| <= sum_t |w_t| sum_k c_k(t) g^-alpha_k, alpha_k = 4..7
  const Real pr = pi();
  std::array<Real, 4> coeff{0, 0, 0, 0};
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Real w = abs(Real(weights[i]));
    const Real& t = ts[i];
    coeff[0] += w * t * sqrt(t) / pow(pr, 3);
    coeff[1] += w * 3 * t / pow(pr, 4);
    coeff[2] += w * 15 * sqrt(t) / (4 * pow(pr, 5));
    coeff[3] += w * 15 / (8 * pow(pr, 6));
  }
  const Real g0 = arith::g0(a);
  const Real zr = to_real(z);
  out.tail = 0;
  if (s != 0) {
    for (int k = 0; k < 4; ++k) {
      const Real alpha = 4 + k;
      out.tail += coeff[k] * 14 * alpha / ((alpha - 3) * pow(g0, 3)) * pow(zr, 3 - alpha);
    }
  }
  const Real ulp = pow(Real(10), -static_cast<int>(working_digits()) + 6);
  out.rounding = largest * ulp * (out.indices + 1);
  return out;
}

Real f_phase(const Real& n, const Real& m, const Rational& a) {
  if (n <= 0 || m <= 0) throw DomainError("f(n, m) requires n, m > 0");
  const Real ar = to_real(a);
  return sqrt(ar * n + m * m / (ar * ar));
}

bool ExpSumSpec::valid() const {
  if (n_low < 1 || m_low < 1 || t <= 0 || a <= 0) return false;
  const Real uu(u);
  const Real ww(w);
  return uu >= n_low && uu <= 2 * n_low && ww >= m_low && ww <= sqrt(Real(2)) * m_low;
}

bool ExpSumSpec::restricted() const {
  return valid() && n_low >= 10 && m_low * sqrt(Real(2)) >= 40 && h_max >= 10 &&
         2 * h_max <= m_low;
}

std::complex<long double> exp_sum(const ExpSumSpec& spec) {
  if (!spec.valid()) throw DomainError("exp_sum: invalid ranges");
  const std::int64_t n_first = static_cast<std::int64_t>(floor(spec.n_low)) + 1;
  const std::int64_t m_first = static_cast<std::int64_t>(floor(spec.m_low)) + 1;
  std::complex<long double> total = 0;
  if (spec.u < n_first || spec.w < m_first) return total;
  const auto table = arith::shared_table(static_cast<std::uint64_t>(spec.u));
  const Real st = sqrt(spec.t);
  for (std::int64_t n = n_first; n <= spec.u; ++n) {
    const std::uint32_t rn = (*table)[static_cast<std::uint64_t>(n)];
    if (rn == 0) continue;
    std::complex<long double> row = 0;
    for (std::int64_t m = m_first; m <= spec.w; ++m) {
      row += unit_phase(f_phase(Real(n), Real(m), spec.a) * st);
    }
    total += static_cast<long double>(rn) * row;
  }
  return total;
}

LambdaBounds lambda_bounds(std::int64_t h, const Real& n_low, const Real& m_low, const Real& t,
                           const Rational& a) {
  if (h < 1 || n_low < 1 || m_low < 1 || t <= 0) {
    throw DomainError("lambda_bounds requires h >= 1, N, M >= 1, t > 0");
  }
  const Real ar = to_real(a);
  const Real base = 2 * ar * n_low + 2 * m_low * m_low / (ar * ar);
  LambdaBounds out;
  out.lambda = Real(3) / 4 * h * m_low * sqrt(t) / pow(base, Real(5) / 2);
  out.upper = 8 * out.lambda;
  return out;
}

Real weyl_phase(const Real& tau, const Real& m, std::int64_t h, const Real& t,
                const Rational& a) {
  const Real ar = to_real(a);
  const Real mh = m + h;
  const Real num = (mh * mh - m * m) / (ar * ar);
  return sqrt(t) * num / (f_phase(tau, mh, a) + f_phase(tau, m, a));
}

Real weyl_phase_second_derivative(const Real& tau, const Real& m, std::int64_t h,
                                  const Real& t, const Rational& a) {
  const Real ar = to_real(a);
  const Real lo = ar * tau + m * m / (ar * ar);
  const Real mh = m + h;
  const Real hi = ar * tau + mh * mh / (ar * ar);
  return sqrt(t) * ar * ar / 4 * (1 / (lo * sqrt(lo)) - 1 / (hi * sqrt(hi)));
}

double weyl_phase_second_derivative_integral(double tau, double m, std::int64_t h, double t,
                                             double a) {
  const auto integrand = [&](double xi) {
    return xi / std::pow(a * tau + xi * xi / (a * a), 2.5);
  };
  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;
  const double integral =
      Kronrod::integrate(integrand, m, m + static_cast<double>(h), 15, 1e-14);
  return 0.75 * std::sqrt(t) * integral;
}

VdcCheck vdc_check(const ExpSumSpec& spec, std::int64_t h, std::int64_t m) {
  if (!spec.valid()) throw DomainError("vdc_check: invalid ranges");
  if (h < 1) throw DomainError("vdc_check requires h >= 1");
  const Real mr(m);
  const Real mh(m + h);
  if (mr < spec.m_low || mh > Real(spec.w)) {
    throw DomainError("vdc_check requires m, m + h in [M, W]");
  }
  VdcCheck out;
  const LambdaBounds lb = lambda_bounds(h, spec.n_low, spec.m_low, spec.t, spec.a);
  out.lambda = lb.lambda;
  const Real span = Real(spec.u) - spec.n_low;
  out.rhs = 40 * span * sqrt(lb.lambda) + 11 / sqrt(lb.lambda);
  const std::int64_t n_first = static_cast<std::int64_t>(floor(spec.n_low)) + 1;
  std::complex<long double> sum = 0;
  for (std::int64_t n = n_first; n <= spec.u; ++n) {
    sum += unit_phase(weyl_phase(Real(n), mr, h, spec.t, spec.a));
  }
  out.lhs = std::abs(sum);
  return out;
}

WeylChoice classify_weyl(const Real& expression, const Real& m_low) {
  WeylChoice out{expression, 0, WeylCase::I};
  mpfr_get_z(out.h.get_mpz_t(), Real(floor(expression)).backend().data(), MPFR_RNDD);
  const Real h = to_real(out.h);
  if (h >= 10 && 2 * h <= m_low) {
    out.kind = WeylCase::I;
  } else if (2 * expression > m_low) {
    out.kind = WeylCase::II;
  } else {
    out.kind = WeylCase::III;
  }
  return out;
}

WeylChoice weyl_h(const Real& m_low, const Real& f, const Real& t) {
  if (m_low <= 0 || f <= 0 || t <= 0) throw DomainError("weyl_h requires M, f, t > 0");
  const Real expression = Real("0.1") * pow(m_low, Real(-1) / 3) * pow(f, Real(5) / 3) *
                          pow(t, Real(-1) / 6);
  return classify_weyl(expression, m_low);
}

PartialSummationCheck partial_summation_check(const Real& n_low, const Real& m_low, int j,
                                              const Real& t, const Rational& a) {
  if (n_low < 1 || m_low < 1 || t <= 0 || j <= 0) {
    throw DomainError("partial_summation_check requires N, M >= 1, t > 0, j > 0");
  }
  const std::int64_t n_first = static_cast<std::int64_t>(floor(n_low)) + 1;
  const std::int64_t n_last = static_cast<std::int64_t>(floor(2 * n_low));
  const std::int64_t m_first = static_cast<std::int64_t>(floor(m_low)) + 1;
  const std::int64_t m_last = static_cast<std::int64_t>(floor(sqrt(Real(2)) * m_low));
  PartialSummationCheck out;
  const Real st = sqrt(t);
  if (n_last >= n_first && m_last >= m_first) {
    const auto table = arith::shared_table(static_cast<std::uint64_t>(n_last));
    const std::size_t width = static_cast<std::size_t>(m_last - m_first + 1);
    // running column sums give E(U, W) for every integer corner (U, W)
    std::vector<std::complex<long double>> column(width, 0);
    std::complex<long double> s_total = 0;
    for (std::int64_t n = n_first; n <= n_last; ++n) {
      const long double rn = (*table)[static_cast<std::uint64_t>(n)];
      std::complex<long double> running = 0;
      for (std::size_t c = 0; c < width; ++c) {
        const Real f = f_phase(Real(n), Real(m_first + static_cast<std::int64_t>(c)), a);
        const std::complex<long double> e = rn * unit_phase(f * st);
        column[c] += e;
        running += column[c];
        out.sup_e = std::max(out.sup_e, std::abs(running));
        s_total += e * static_cast<long double>(pow(f, -j));
      }
    }
    out.s_abs = std::abs(s_total);
  }
  out.bound = 4 * Real(out.sup_e) / pow(f_phase(n_low, m_low, a), j);
  return out;
}

}  // namespace elat::fourier
