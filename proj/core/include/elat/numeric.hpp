// Exact and high-precision number types shared by every module.
//
// Integer and Rational are GMP values; every lattice-membership decision in
// the library is made with these. Real is an MPFR float whose precision is a
// process-wide setting (see ScopedPrecision); it is used for volumes,
// discrepancies and the explicit bounds.

#pragma once

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace elat {

using Integer = mpz_class;
using Rational = mpq_class;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;
static_assert(BOOST_MULTIPRECISION_MPFR_DEFAULT_PRECISION == kDefaultDigits,
              "build must define the MPFR default precision as kDefaultDigits");

/// Input text that is not an exact integer or "p/q" fraction.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on an argument's value was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An enumeration would visit more work units than the caller allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t needed, std::uint64_t budget);
  std::uint64_t needed() const { return needed_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t needed_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// Parses "p", "-p" or "p/q". Decimal points and exponents are rejected so
/// that nothing is silently rounded.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer isqrt(const Integer& n);

/// floor(sqrt(n)) for 64-bit n, exact.
std::uint64_t isqrt_u64(std::uint64_t n);

/// floor(sqrt(t)) for rational t >= 0, without floating point.
Integer isqrt_rational_floor(const Rational& t);

bool fits_u64(const Integer& n);
std::uint64_t to_u64(const Integer& n);

Real to_real(const Rational& q);
Real to_real(const Integer& n);
Real pi();

/// Formats with `digits` significant decimal digits; deterministic.
std::string format_real(const Real& v, unsigned digits);

/// Sets the default MPFR working precision (decimal digits) for the scope.
/// Not thread-safe: construct before starting worker threads.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

unsigned working_digits();

}  // namespace elat
