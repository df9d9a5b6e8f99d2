#include <doctest.h>

#include <cmath>

#include "mstlab/constants.hpp"
#include "mstlab/errors.hpp"

using namespace mstlab;

namespace {

const WrightTable& shared_wright() {
  static const WrightTable table = wright_table(4001);
  return table;
}

const DampedPsi2& shared_psi2() {
  static const DampedPsi2 psi2(shared_wright());
  return psi2;
}

double d(const Real& x) { return static_cast<double>(x); }

}  // namespace

TEST_SUITE("constants") {
  TEST_CASE("log integral and c1") {
    const QuadResult ilog = log_integral();
    // From c1 = 0.0384956 and I_log = -2 (1 + zeta(3) + c1).
    CHECK(std::abs(ilog.value + 2 * (1 + 1.2020569031595943 + 0.0384956)) < 3e-7);
    const QuadResult a = c1();
    CHECK(a.value > 0);
    CHECK(std::abs(a.value - 0.0384956) < 1e-6);
    CHECK(std::abs(c1(1e-11).value - a.value) < 1e-6);
    CHECK(a.error_estimate <= 1e-10);
  }

  TEST_CASE("tree coefficient, two methods") {
    const DualEstimate e = c2a();
    const double closed = -std::tgamma(1.0 / 3.0) / (8 * std::cbrt(9.0));
    CHECK(d(e.closed_form) == doctest::Approx(closed).epsilon(1e-14));
    CHECK(std::abs(d(e.closed_form) + 0.16098) < 1e-5);
    CHECK(std::abs(e.quadrature.value - closed) < 1e-8);
    CHECK(e.difference() < 1e-8);
  }

  TEST_CASE("unicyclic coefficient, two methods") {
    const DualEstimate e = c2b();
    const double closed = -0.5 * std::pow(3.0, -1.0 / 6.0) * std::sqrt(M_PI) * std::tgamma(5.0 / 6.0);
    CHECK(d(e.closed_form) == doctest::Approx(closed).epsilon(1e-14));
    CHECK(std::abs(d(e.closed_form) + 0.83298) < 1e-5);
    CHECK(e.difference() < 1e-8);
  }

  TEST_CASE("series summands") {
    const WrightTable& w = shared_wright();
    // First addend ~ (1/4) k^{-2/3}.
    const PilTerm t500 = pil_summand(500, w);
    CHECK(d(t500.addends[0]) * std::pow(500.0, 2.0 / 3.0) == doctest::Approx(0.25).epsilon(0.02));
    CHECK(t500.certified_digits >= 12);
    const PilTerm t800 = pil_summand(800, w);
    CHECK(d(t800.value) * std::pow(800.0, 5.0 / 3.0) == doctest::Approx(-1.0 / 6.0).epsilon(0.2));
    for (int k = 500; k <= 2000; k += 250) {
      const double scaled = d(pil_summand(k, w).value) * std::pow(k, 5.0 / 3.0);
      CHECK(scaled >= -1.0 / 6.0 - 0.05);
      CHECK(scaled <= -1.0 / 6.0 + 0.05);
    }
    // The summand times k^{5/3} approaches the tail slope.
    const double near = d(pil_summand(2000, w).value) * std::pow(2000.0, 5.0 / 3.0);
    CHECK(near == doctest::Approx(d(pil_tail_slope())).epsilon(0.005));
    CHECK_THROWS_AS(pil_summand(0, w), DomainError);
    CHECK_THROWS_AS(pil_summand(2001, w), DomainError);
  }

  TEST_CASE("cancellation is certified") {
    // The digits lost grow with k; at 30 working digits they still leave more than 12.
    const WrightTable low = wright_table(4001, 30);
    const double early = pil_summand(10, low).certified_digits;
    const double late = pil_summand(2000, low).certified_digits;
    CHECK(late < early);
    CHECK(late >= 12);
    CHECK(d(pil_summand(2000, low).value) ==
          doctest::Approx(d(pil_summand(2000, shared_wright()).value)).epsilon(1e-12));
  }

  TEST_CASE("complex-component series") {
    const WrightTable& w = shared_wright();
    const SeriesEstimate partial = c2c(1000, false, w);
    CHECK(std::abs(d(partial.value) + 0.7331) < 5e-4);
    CHECK(partial.tail == 0);
    const SeriesEstimate tailed = c2c(1000, true, w);
    CHECK(std::abs(d(tailed.value) + 0.7355) < 2e-3);
    CHECK(tailed.partial == partial.partial);
    const SeriesEstimate longer = c2c(2000, true, w);
    CHECK(std::abs(d(longer.value - tailed.value)) < 1e-3);
    CHECK_THROWS_AS(c2c(99, true, w), DomainError);
  }

  TEST_CASE("complex-component integral") {
    const DampedPsi2& psi2 = shared_psi2();
    const TailedIntegral integral = c2c_integral(psi2);
    CHECK(std::abs(integral.value() + 0.7355) < 2e-3);
    const SeriesEstimate series = c2c(1000, true, shared_wright());
    CHECK(std::abs(integral.value() - d(series.value)) < 2e-3);
    // Near the origin psi2(t) ~ (5/24) t^2, so the integrand tends to 5/24 - 1/2.
    CHECK(c2c_integrand(1e-4, psi2) == doctest::Approx(5.0 / 24 - 0.5).epsilon(1e-4));
    // psi2 e^{-t^2/24} ~ t^2/2 + offset, so the integrand decays like offset / x^3.
    CHECK(c2c_integrand(10, psi2) * 1000 == doctest::Approx(psi_asymptotic_offset()).epsilon(0.05));
    CHECK(c2c_integrand(20, psi2) * 8000 == doctest::Approx(psi_asymptotic_offset()).epsilon(0.02));
    CHECK_THROWS_AS(c2c_integrand(0, psi2), DomainError);
    CHECK_THROWS_AS(c2c_integral(DampedPsi2(wright_table(400)), 30), TruncationError);
  }

  TEST_CASE("big F") {
    for (double x : {0.3, 1.0, 7.5}) CHECK(big_F(x, x / 2) == doctest::Approx(x * x * x / 24));
    CHECK(big_F(1, 0) == doctest::Approx(1.0 / 6.0));
    CHECK(big_F(2, 1) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(big_F(0, 1), DomainError);
  }

  TEST_CASE("f(lambda)") {
    const DampedPsi2& psi2 = shared_psi2();
    CHECK(f_of_lambda(-5, psi2).value < 0.01);
    const double f5 = f_of_lambda(5, psi2).value;
    CHECK(f5 > 0.9);
    CHECK(f5 < 1.1);
    CHECK(std::abs(f_of_lambda(8, psi2).value - 1) < 1e-3);
    double previous = 0;
    for (double lambda = -8; lambda <= 2; lambda += 0.5) {
      const double value = f_of_lambda(lambda, psi2).value;
      CHECK(value > previous);
      previous = value;
    }
    CHECK_THROWS_AS(f_of_lambda(11, psi2), DomainError);
  }

  TEST_CASE("lambda integral") {
    const QuadResult r = lambda_integral(shared_psi2());
    CHECK(std::abs(r.value - d(c2c(1000, true, shared_wright()).value)) < 0.02);
    CHECK_THROWS_AS(lambda_integral(shared_psi2(), 1, 2), DomainError);
  }

  TEST_CASE("Gaussian identity") {
    for (double x : {0.1, 1.0, 5.0}) CHECK(gaussian_identity_residual(x) < 1e-8);
    for (int i = 0; i <= 40; ++i) {
      const double x = 0.01 * std::pow(2000.0, i / 40.0);
      CHECK(gaussian_identity_residual(x) < 1e-8);
    }
    CHECK_THROWS_AS(gaussian_identity_residual(-1), DomainError);
  }

  TEST_CASE("assembled report") {
    const ConstantsReport r = c2_total();
    CHECK(std::abs(d(r.c2) + 1.7295) < 3e-3);
    CHECK(d(r.c2) == doctest::Approx(d(r.c2a.closed_form + r.c2b.closed_form + r.c2c)).epsilon(1e-15));
    CHECK(std::abs(r.direct.x_form.value() - r.direct.y_form.value()) < 1e-8);
    CHECK(std::abs(d(r.c2) - r.direct.x_form.value()) < 2e-3);
    CHECK(std::abs(r.c1.value - d(-1 - r.zeta3 - Real(r.log_integral.value) / 2)) < 1e-15);
    CHECK(d(r.c2c_partial) == doctest::Approx(d(r.c2c_series.partial)));
    CHECK_FALSE(r.lambda_integral.has_value());
    CHECK_THROWS_AS(c2_total(ConstantsOptions{50}), DomainError);
  }
}
