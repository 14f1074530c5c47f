#include "elat/ellipsoid.hpp"

#include <utility>

namespace elat {

EllipsoidParams::EllipsoidParams(Rational a_in, Rational x_in)
    : a(std::move(a_in)), x(std::move(x_in)) {
  a.canonicalize();
  x.canonicalize();
  if (a <= 0) throw DomainError("ellipsoid parameter a must be positive");
  if (x <= 0) throw DomainError("ellipsoid dilation x must be positive");
}

EllipsoidParams EllipsoidParams::parse(std::string_view a, std::string_view x) {
  return EllipsoidParams(parse_rational(a), parse_rational(x));
}

bool EllipsoidParams::precond_28() const {
  return x >= 15000 && a * x >= 1 && a <= x;
}

bool EllipsoidParams::precond_27() const {
  const Real y = smoothing_y(*this);
  return y >= 1 && 3 * y <= to_real(x);
}

Real l_factor(const Real& a, const Real& x) {
  if (a <= 0 || x <= 0) throw DomainError("l_factor requires a, x > 0");
  return log(100 * x) + abs(log(a));
}

Real l_factor(const EllipsoidParams& p) { return l_factor(to_real(p.a), to_real(p.x)); }

Real smoothing_y(const EllipsoidParams& p) {
  const Real a = to_real(p.a);
  const Real x = to_real(p.x);
  const Real l = l_factor(a, x);
  return Real("73.6") * pow(a, Real(1) / 8) * pow(x, Real(3) / 16) * pow(l, Real(3) / 8);
}

Real poisson_cut_z(const EllipsoidParams& p) {
  const Real y = smoothing_y(p);
  return Real("0.3852") / y * sqrt(to_real(p.x) + 2 * y);
}

}  // namespace elat
