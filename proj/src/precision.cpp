#include "mstlab/precision.hpp"

#include <boost/math/special_functions/bernoulli.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mstlab/errors.hpp"

namespace mstlab {

PrecisionScope::PrecisionScope(unsigned digits) : saved_(Real::default_precision()) {
  Real::default_precision(digits);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

Real to_real(const BigInt& value) {
  Real r;
  mpfr_set_z(r.backend().data(), value.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const Rational& value) {
  Real r;
  mpfr_set_q(r.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string to_decimal(const Real& value, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

std::string to_decimal(const Rational& value, int digits) {
  PrecisionScope scope(static_cast<unsigned>(digits) + 10);
  return to_decimal(to_real(value), digits);
}

std::string to_fraction_string(const Rational& value) {
  Rational canonical = value;
  canonical.canonicalize();
  return canonical.get_str();
}

Real log_factorial(unsigned long n) {
  return boost::multiprecision::lgamma(Real(n) + 1);
}

Real zeta2() {
  Real pi = boost::math::constants::pi<Real>();
  return pi * pi / 6;
}

Real zeta3() {
  Real sum = 0;
  Real central = 1;  // C(2k, k)
  Real eps = pow(Real(10), -static_cast<long>(Real::default_precision()) - 5);
  for (unsigned long k = 1;; ++k) {
    central = central * (2 * (2 * k - 1)) / k;
    Real kk = Real(k);
    Real term = 1 / (kk * kk * kk * central);
    if (k % 2 == 1) {
      sum += term;
    } else {
      sum -= term;
    }
    if (term < eps) break;
  }
  return sum * 5 / 2;
}

Real hurwitz_zeta(const Real& s, const Real& a) {
  if (!(s > 1) || !(a > 0)) throw DomainError("hurwitz_zeta requires s > 1 and a > 0");
  const unsigned digits = Real::default_precision();
  // Shift the argument until the Bernoulli remainder (2j)!/(2 pi x)^{2j}
  // is below the working precision for j ~ digits/2.
  const double shift_target = static_cast<double>(digits) + 10.0;
  Real sum = 0;
  Real x = a;
  while (x < shift_target) {
    sum += pow(x, -s);
    x += 1;
  }
  sum += pow(x, 1 - s) / (s - 1) + pow(x, -s) / 2;
  const unsigned terms = std::max(4u, digits / 2);
  Real rising = s;          // s (s+1) ... (s+2j-2)
  Real power = pow(x, -s - 1);  // x^{-s-2j+1}
  Real fact = 2;            // (2j)!
  Real x2 = x * x;
  for (unsigned j = 1; j <= terms; ++j) {
    Real term = boost::math::bernoulli_b2n<Real>(j) / fact * rising * power;
    sum += term;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    power /= x2;
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return sum;
}

}  // namespace mstlab
