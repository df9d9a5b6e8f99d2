#pragma once

// Number types shared by all modules: exact integers and rationals (GMP)
// and variable-precision binary floating point (MPFR through Boost).

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <string>

namespace mstlab {

using BigInt = mpz_class;
using Rational = mpq_class;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 60;

/// Sets the MPFR default precision (decimal digits) for the lifetime of the
/// object and restores the previous value afterwards. Values created inside
/// the scope carry its precision; arithmetic keeps the larger operand precision.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned digits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

Real to_real(const BigInt& value);
Real to_real(const Rational& value);

/// Fixed-point-free decimal rendering with `digits` significant digits.
std::string to_decimal(const Real& value, int digits);
std::string to_decimal(const Rational& value, int digits);

/// "p/q" (or "p" when q = 1).
std::string to_fraction_string(const Rational& value);

/// ln(n!) for a nonnegative integer, at the current default precision.
Real log_factorial(unsigned long n);

/// pi^2/6.
Real zeta2();

/// Apery's constant from the central-binomial series
/// zeta(3) = 5/2 sum_{k>=1} (-1)^{k+1} / (k^3 C(2k,k)), whose terms shrink by 4 per step.
Real zeta3();

/// Hurwitz zeta sum_{k>=0} (a+k)^{-s} for s > 1, a > 0 by Euler-Maclaurin.
Real hurwitz_zeta(const Real& s, const Real& a);

}  // namespace mstlab
