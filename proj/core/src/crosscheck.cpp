#include "elat/crosscheck.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace elat::crosscheck {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 61>;

double integrate(const std::function<double(double)>& f, double lo, double hi) {
  return Kronrod::integrate(f, lo, hi, 20, 1e-13);
}

}  // namespace

Integer brute_lattice_count(const EllipsoidParams& p) {
  const Integer& pa = p.a.get_num();
  const Integer& qa = p.a.get_den();
  const Integer& xn = p.x.get_num();
  const Integer& xd = p.x.get_den();
  const Integer lhs1 = qa * qa * qa * xd;
  const Integer lhs3 = pa * pa * pa * xd;
  const Integer rhs = pa * qa * qa * xn;
  // generous boxes: |u1|, |u2| <= sqrt(a x) + 1, |u3| <= sqrt(x) / a + 1
  const long b12 = static_cast<long>(to_u64(isqrt(floor(p.a * p.x)))) + 1;
  const long b3 = static_cast<long>(to_u64(isqrt(floor(p.x / (p.a * p.a))))) + 1;
  Integer total = 0;
  for (long u3 = -b3; u3 <= b3; ++u3) {
    for (long u1 = -b12; u1 <= b12; ++u1) {
      for (long u2 = -b12; u2 <= b12; ++u2) {
        const Integer lhs = lhs1 * (u1 * u1 + u2 * u2) + lhs3 * (u3 * u3);
        if (lhs <= rhs) ++total;
      }
    }
  }
  return total;
}

std::uint64_t brute_disc_count(std::uint64_t t) {
  const auto b = static_cast<std::int64_t>(std::sqrt(static_cast<double>(t))) + 1;
  std::uint64_t total = 0;
  for (std::int64_t u = -b; u <= b; ++u) {
    for (std::int64_t v = -b; v <= b; ++v) {
      if (static_cast<std::uint64_t>(u * u + v * v) <= t) ++total;
    }
  }
  return total;
}

std::uint64_t brute_r3_star(const Rational& x) {
  const auto b = static_cast<std::int64_t>(to_u64(isqrt(floor(x)))) + 1;
  std::uint64_t total = 0;
  for (std::int64_t m1 = -b; m1 <= b; ++m1) {
    for (std::int64_t m2 = -b; m2 <= b; ++m2) {
      for (std::int64_t m3 = -b; m3 <= b; ++m3) {
        const std::int64_t n = std::max(m1 * m1 + m2 * m2, m3 * m3);
        if (n > 0 && Rational(n) <= x) ++total;
      }
    }
  }
  return total;
}

long double brute_gstar_sum(const Rational& a, long double alpha, const Rational& lo,
                            const Rational& hi) {
  const Rational lo_sq = lo * lo;
  const Rational hi_sq = hi * hi;
  const auto b12 = static_cast<std::int64_t>(to_u64(isqrt(floor(hi_sq / a)))) + 1;
  const auto b3 = static_cast<std::int64_t>(to_u64(floor(a * hi))) + 1;
  const long double a_ld = static_cast<long double>(to_real(a));
  long double total = 0.0L;
  for (std::int64_t m3 = -b3; m3 <= b3; ++m3) {
    for (std::int64_t m1 = -b12; m1 <= b12; ++m1) {
      for (std::int64_t m2 = -b12; m2 <= b12; ++m2) {
        if (m1 == 0 && m2 == 0 && m3 == 0) continue;
        // g*^2 = max(a n, m3^2 / a^2), compared exactly
        const Rational planar = a * (m1 * m1 + m2 * m2);
        const Rational axial = Rational(m3 * m3) / (a * a);
        const Rational g_sq = planar > axial ? planar : axial;
        if (g_sq <= lo_sq || g_sq > hi_sq) continue;
        const long double g = std::max(
            std::sqrt(a_ld * static_cast<long double>(m1 * m1 + m2 * m2)),
            static_cast<long double>(std::llabs(m3)) / a_ld);
        total += std::pow(g, -alpha);
      }
    }
  }
  return total;
}

double i_ball_quadrature(double g, double t) {
  constexpr double pi = std::numbers::pi;
  const double w = g * std::sqrt(t);
  const auto f = [&](double v) { return std::cos(2 * pi * w * v) * pi * (1 - v * v); };
  return t * std::sqrt(t) * integrate(f, -1.0, 1.0);
}

double i_cylinder_quadrature(const std::array<std::int64_t, 3>& m, double a, double t) {
  constexpr double pi = std::numbers::pi;
  const double k = std::hypot(static_cast<double>(m[0]), static_cast<double>(m[1]));
  const double height = std::sqrt(t) / a;
  // u3 = height sin(theta) makes the slice radius sqrt(a t) cos(theta) smooth
  const auto f = [&](double theta) {
    const double u3 = height * std::sin(theta);
    const double radius = std::sqrt(a * t) * std::cos(theta);
    const double disc = k == 0.0 ? pi * radius * radius
                                 : radius * std::cyl_bessel_j(1.0, 2 * pi * k * radius) / k;
    return std::cos(2 * pi * static_cast<double>(m[2]) * u3) * disc * height * std::cos(theta);
  };
  return integrate(f, -pi / 2, pi / 2);
}

double twice_iterated(const std::function<double(double)>& f, double t) {
  // s = v^2 at both levels removes the sqrt endpoint behaviour of I(m, .)
  const auto inner = [&](double w) {
    if (w <= 0) return 0.0;
    const auto g = [&](double v) { return f(v * v) * 2 * v; };
    return Kronrod::integrate(g, 0.0, w, 8, 1e-14) * 2 * w;
  };
  // Depth is capped at both levels: near w = 0 the inner value is tiny and its
  // relative error cannot settle, and the outer level sees the inner error as noise.
  return Kronrod::integrate(inner, 0.0, std::sqrt(t), 8, 1e-11);
}

Real weyl_phase_second_difference(const Real& tau, const Real& m, std::int64_t h,
                                  const Real& t, const Rational& a, const Real& step) {
  const Real ar = to_real(a);
  const Real st = sqrt(t);
  // direct difference of the two square roots; the step keeps cancellation within precision
  const auto phase = [&](const Real& v) {
    return (sqrt(ar * v + (m + h) * (m + h) / (ar * ar)) - sqrt(ar * v + m * m / (ar * ar))) *
           st;
  };
  return (phase(tau + step) - 2 * phase(tau) + phase(tau - step)) / (step * step);
}

std::vector<std::pair<Rational, std::uint64_t>> counting_steps(const Rational& a,
                                                               const Rational& t_max) {
  std::map<Rational, std::uint64_t> steps;
  const auto b12 = static_cast<std::int64_t>(to_u64(isqrt(floor(a * t_max)))) + 1;
  const auto b3 = static_cast<std::int64_t>(to_u64(isqrt(floor(t_max / (a * a))))) + 1;
  for (std::int64_t u3 = -b3; u3 <= b3; ++u3) {
    for (std::int64_t u1 = -b12; u1 <= b12; ++u1) {
      for (std::int64_t u2 = -b12; u2 <= b12; ++u2) {
        Rational q = Rational(u1 * u1 + u2 * u2) / a + a * a * (u3 * u3);
        q.canonicalize();
        if (q <= t_max) ++steps[q];
      }
    }
  }
  return {steps.begin(), steps.end()};
}

std::uint64_t counting_function(const std::vector<std::pair<Rational, std::uint64_t>>& steps,
                                double t) {
  std::uint64_t total = 0;
  for (const auto& [q, mult] : steps) {
    if (q.get_d() > t) break;
    total += mult;
  }
  return total;
}

}  // namespace elat::crosscheck
