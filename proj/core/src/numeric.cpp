#include "elat/numeric.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace elat {

BudgetExceeded::BudgetExceeded(std::uint64_t needed, std::uint64_t budget)
    : std::runtime_error("enumeration needs " + std::to_string(needed) +
                         " work units, budget is " + std::to_string(budget)),
      needed_(needed),
      budget_(budget) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("not an exact rational (expected p or p/q): '" +
                     std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  // correct the double estimate in both directions; products stay in 128 bits
  while (static_cast<unsigned __int128>(r) * r > n) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Integer isqrt_rational_floor(const Rational& t) {
  if (t < 0) throw DomainError("isqrt_rational_floor of a negative value");
  // k^2 is an integer, so k^2 <= t iff k^2 <= floor(t)
  Integer k = isqrt(floor(t));
  return k;
}

bool fits_u64(const Integer& n) {
  return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& n) {
  if (!fits_u64(n)) throw DomainError("integer does not fit in 64 bits");
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof v, 0, 0, n.get_mpz_t());
  return v;
}

Real to_real(const Rational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Integer& n) {
  Real r;
  mpfr_set_z(r.backend().data(), n.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

std::string format_real(const Real& v, unsigned digits) {
  // scientific precision counts digits after the point
  return v.str(static_cast<std::streamsize>(digits > 1 ? digits - 1 : 0), std::ios_base::scientific);
}

ScopedPrecision::ScopedPrecision(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

ScopedPrecision::~ScopedPrecision() { Real::default_precision(saved_); }

unsigned working_digits() { return Real::default_precision(); }

}  // namespace elat
