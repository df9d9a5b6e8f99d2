#include <doctest.h>

#include "mstlab/errors.hpp"
#include "mstlab/precision.hpp"

using namespace mstlab;

TEST_SUITE("precision") {
  TEST_CASE("zeta values") {
    PrecisionScope scope(50);
    // Apery's constant to 45 digits.
    const Real apery("1.20205690315959428539973816151144999076498629");
    CHECK(abs(zeta3() - apery) < Real("1e-44"));
    const Real pi = boost::math::constants::pi<Real>();
    CHECK(abs(zeta2() - pi * pi / 6) < Real("1e-48"));
  }

  TEST_CASE("Hurwitz zeta") {
    PrecisionScope scope(40);
    CHECK(abs(hurwitz_zeta(Real(2), Real(1)) - zeta2()) < Real("1e-38"));
    CHECK(abs(hurwitz_zeta(Real(3), Real(1)) - zeta3()) < Real("1e-38"));
    // zeta(s, a) - zeta(s, a+1) = a^{-s}
    for (double s : {1.5, 5.0 / 3.0, 4.5}) {
      for (double a : {0.5, 3.0, 1001.0}) {
        const Real lhs = hurwitz_zeta(Real(s), Real(a)) - hurwitz_zeta(Real(s), Real(a) + 1);
        const Real rhs = pow(Real(a), -Real(s));
        CHECK(abs(lhs / rhs - 1) < Real("1e-35"));
      }
    }
  }

  TEST_CASE("precision scope restores the default") {
    const unsigned before = Real::default_precision();
    {
      PrecisionScope outer(80);
      CHECK(Real::default_precision() == 80);
      {
        PrecisionScope inner(120);
        CHECK(Real::default_precision() == 120);
      }
      CHECK(Real::default_precision() == 80);
    }
    CHECK(Real::default_precision() == before);
  }

  TEST_CASE("renderings") {
    CHECK(to_fraction_string(Rational(6, 8)) == "3/4");
    CHECK(to_fraction_string(Rational(4, 2)) == "2");
    CHECK(to_decimal(Rational(1, 3), 5) == "0.33333");
    PrecisionScope scope(30);
    CHECK(to_real(BigInt("123456789012345678901234567")) == Real("123456789012345678901234567"));
    CHECK(abs(log_factorial(10) - log(Real(3628800))) < Real("1e-28"));
  }
}
