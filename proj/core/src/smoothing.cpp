#include "elat/smoothing.hpp"

#include "elat/arith.hpp"
#include "elat/count.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

namespace elat::smoothing {

namespace {

// max |phi'''| on [-1/3, 1/3]; see tools/derive_m3.py
constexpr const char* kPhiThirdDerivativeMax =
    "105.243527984804238344543978016031219957653167743524017939588";

void check_window(const Real& x, const Real& offset) {
  if (x <= 0) throw DomainError("smoothing requires x > 0");
  if (3 * abs(offset) > x) throw DomainError("smoothing requires |u| <= x/3");
}

}  // namespace

SmoothingParams::SmoothingParams(Rational x_in, Rational u_in, int sign_in)
    : x(std::move(x_in)), u(std::move(u_in)), sign(sign_in) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (x <= 0) throw DomainError("smoothing requires x > 0");
  if (u < 0) throw DomainError("smoothing length u must be nonnegative");
  if (3 * u > x) throw DomainError("smoothing requires |u| <= x/3");
}

Real phi(const Real& w) {
  if (2 * w < -1) throw DomainError("phi requires w >= -1/2");
  const Real a = 1 + 2 * w;
  const Real b = 1 + w;
  return a * a * a * sqrt(a) - 2 * b * b * b * sqrt(b) + 1;
}

Real phi_third_derivative(const Real& w) {
  if (2 * w <= -1) throw DomainError("phi''' requires w > -1/2");
  return Real(105) / 8 * (8 * sqrt(1 + 2 * w) - 2 * sqrt(1 + w));
}

Real phi_fourth_derivative(const Real& w) {
  if (2 * w <= -1) throw DomainError("phi'''' requires w > -1/2");
  return Real(105) / 8 * (8 / sqrt(1 + 2 * w) - 1 / sqrt(1 + w));
}

Real phi_third_derivative_max() { return Real(kPhiThirdDerivativeMax); }

ExtremumSearch phi_third_derivative_max_search(unsigned grid_points, unsigned rounds) {
  const Real third = Real(1) / 3;
  Real lo = -third;
  Real hi = third;
  ExtremumSearch best{abs(phi_third_derivative(lo)), lo, true};
  for (unsigned round = 0; round < rounds; ++round) {
    const Real step = (hi - lo) / (grid_points - 1);
    for (unsigned i = 0; i < grid_points; ++i) {
      const Real v = lo + step * i;
      if (phi_fourth_derivative(v) <= 0) best.monotone = false;
      const Real d3 = abs(phi_third_derivative(v));
      if (d3 > best.value) {
        best.value = d3;
        best.argmax = v;
      }
    }
    lo = boost::multiprecision::max(Real(-third), Real(best.argmax - step));
    hi = boost::multiprecision::min(third, Real(best.argmax + step));
  }
  return best;
}

TaylorDefect phi_taylor_defect(const Real& w) {
  if (3 * abs(w) > 1) throw DomainError("Taylor defect requires |w| <= 1/3");
  TaylorDefect out;
  out.defect = abs(phi(w) - Real(35) / 4 * w * w);
  out.bound = abs(w * w * w) / 6 * phi_third_derivative_max();
  return out;
}

Real volume_smoothing_constant() { return 8 * pi() / 315 * phi_third_derivative_max(); }

Real d2_volume(const Real& x, const Real& offset) {
  check_window(x, offset);
  return 4 * pi() / 3 * (4 * pow(x, Real(7) / 2) / 35) * phi(offset / x);
}

Real d2_volume(const Real& x, const Real& u, int sign) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  return d2_volume(x, sign * u);
}

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 31>;

// signed integral over [a, b] (a may exceed b), split at the given points
double integrate_split(const std::function<double(double)>& f, double a, double b,
                       const std::vector<double>& cuts, double abs_tol) {
  const double sign = b >= a ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);
  std::vector<double> nodes{lo};
  for (double c : cuts) {
    if (c > lo && c < hi) nodes.push_back(c);
  }
  nodes.push_back(hi);
  std::sort(nodes.begin(), nodes.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    if (nodes[i + 1] <= nodes[i]) continue;
    double err = 0.0;
    double l1 = 0.0;
    const double piece = Kronrod::integrate(f, nodes[i], nodes[i + 1], 15, 1e-13, &err, &l1);
    if (!(err <= std::max(abs_tol, 1e-12 * l1))) {
      throw QuadratureError("d2_generic: quadrature did not converge on [" +
                            std::to_string(nodes[i]) + ", " + std::to_string(nodes[i + 1]) +
                            "]");
    }
    total += piece;
  }
  return sign * total;
}

}  // namespace

double d2_generic(const std::function<double(double)>& f, double x, double offset,
                  std::span<const double> breakpoints, double abs_tol) {
  if (!std::isfinite(x) || !std::isfinite(offset)) {
    throw DomainError("d2_generic requires finite x and u");
  }
  const std::vector<double> inner_cuts(breakpoints.begin(), breakpoints.end());
  // the inner integral is continuous in t1 with kinks where t1 or t1 + u hits a jump
  std::vector<double> outer_cuts;
  for (double b : breakpoints) {
    outer_cuts.push_back(b);
    outer_cuts.push_back(b - offset);
  }
  const auto inner = [&](double t1) {
    return integrate_split(f, t1, t1 + offset, inner_cuts, abs_tol);
  };
  return integrate_split(inner, x, x + offset, outer_cuts, abs_tol);
}

Rational d2_step_kernel(const Rational& q, const Rational& x, const Rational& offset) {
  const auto sq_pos = [](const Rational& v) { return v > 0 ? Rational(v * v) : Rational(0); };
  Rational k = sq_pos(x + 2 * offset - q) - 2 * sq_pos(x + offset - q) + sq_pos(x - q);
  return k / 2;
}

Rational d2_count_exact(const EllipsoidParams& p, const Rational& u, int sign,
                        std::uint64_t budget) {
  const SmoothingParams window(p.x, u, sign);
  const Rational s = window.offset();
  if (s == 0) return 0;
  const Rational lo = s > 0 ? p.x : Rational(p.x + 2 * s);
  const Rational hi = s > 0 ? Rational(p.x + 2 * s) : p.x;
  const Rational& a = p.a;

  // full-weight core: every point with Q(m) <= lo sees the whole window
  const Integer core = count::lattice_count(EllipsoidParams(a, lo), {0, budget});

  const std::uint64_t n_top = to_u64(floor(a * hi));
  const auto table = arith::shared_table(n_top);
  const std::uint64_t slices = to_u64(isqrt_rational_floor(hi / (a * a)));

  struct Band {
    Rational base;
    std::uint64_t n_lo;
    std::uint64_t n_hi;
    unsigned weight;
  };
  std::vector<Band> bands;
  Integer shell_points = 0;
  for (std::uint64_t u3 = 0; u3 <= slices; ++u3) {
    const Rational base = a * a * u3 * u3;
    const Rational below = lo - base;
    const std::uint64_t n_lo = below < 0 ? 0 : to_u64(floor(a * below)) + 1;
    const Integer n_hi_z = floor(a * (hi - base));
    if (n_hi_z < 0 || to_u64(n_hi_z) < n_lo) continue;
    const std::uint64_t n_hi = to_u64(n_hi_z);
    const unsigned weight = u3 == 0 ? 1 : 2;
    const std::uint64_t below_count = n_lo == 0 ? 0 : table->prefix(n_lo - 1);
    shell_points += Integer(table->prefix(n_hi) - below_count) * weight;
    bands.push_back({base, n_lo, n_hi, weight});
  }
  if (!fits_u64(shell_points) || to_u64(shell_points) > budget) {
    throw BudgetExceeded(fits_u64(shell_points) ? to_u64(shell_points) : ~std::uint64_t{0},
                         budget);
  }

  Rational total = Rational(core) * s * s;
  for (const Band& band : bands) {
    for (std::uint64_t n = band.n_lo; n <= band.n_hi; ++n) {
      const std::uint32_t rn = (*table)[n];
      if (rn == 0) continue;
      const Rational q = Rational(n) / a + band.base;
      total += d2_step_kernel(q, p.x, s) * (rn * band.weight);
    }
  }
  total.canonicalize();
  return total;
}

}  // namespace elat::smoothing
