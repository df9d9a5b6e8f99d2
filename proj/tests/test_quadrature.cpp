#include <doctest.h>

#include <cmath>

#include "mstlab/errors.hpp"
#include "mstlab/quadrature.hpp"

using namespace mstlab;

TEST_SUITE("quadrature") {
  TEST_CASE("finite interval") {
    const QuadResult r = integrate([](double x) { return std::sin(x); }, 0.0, M_PI);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(r.error_estimate >= 0);
    CHECK(r.error_estimate <= 1e-10);
    CHECK(r.evaluations >= 21);
  }

  TEST_CASE("half line, exponential map") {
    const QuadResult r = integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0,
                                               Tail::exponential);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
  }

  TEST_CASE("half line, algebraic map") {
    // int_1^inf x^{-2} dx = 1, int_2^inf x^{-3/2} dx = sqrt 2
    CHECK(std::abs(integrate_to_infinity([](double x) { return 1 / (x * x); }, 1.0,
                                         Tail::algebraic).value - 1.0) < 1e-12);
    CHECK(std::abs(integrate_to_infinity([](double x) { return std::pow(x, -1.5); }, 2.0,
                                         Tail::algebraic).value - std::sqrt(2.0)) < 1e-10);
  }

  TEST_CASE("endpoint singularity is reached by bisection") {
    // int_0^1 x^{-1/2} dx = 2
    QuadOptions opts;
    opts.tolerance = 1e-8;
    opts.max_depth = 20;
    const QuadResult r = integrate([](double x) { return 1 / std::sqrt(x); }, 0.0, 1.0, opts);
    CHECK(std::abs(r.value - 2.0) < 1e-7);
  }

  TEST_CASE("stable under tighter tolerance") {
    auto f = [](double x) { return std::log1p(x) * std::exp(-x * x); };
    QuadOptions coarse, fine;
    coarse.tolerance = 1e-8;
    fine.tolerance = 1e-12;
    const QuadResult a = integrate(f, 0.0, 5.0, coarse);
    const QuadResult b = integrate(f, 0.0, 5.0, fine);
    CHECK(std::abs(a.value - b.value) <= 2 * a.error_estimate + 1e-15);
  }

  TEST_CASE("panels and sums") {
    const QuadResult r = integrate_panels([](double x) { return x * x; }, {0.0, 1.0, 2.0, 3.0});
    CHECK(r.value == doctest::Approx(9.0).epsilon(1e-14));
    const QuadResult s = QuadResult{1.0, 0.1, 3} + QuadResult{2.0, 0.2, 4};
    CHECK(s.value == 3.0);
    CHECK(s.error_estimate == doctest::Approx(0.3));
    CHECK(s.evaluations == 7);
  }

  TEST_CASE("failures") {
    QuadOptions opts;
    opts.tolerance = 1e-14;
    opts.max_depth = 2;
    try {
      integrate([](double x) { return std::abs(x - 0.3337); }, 0.0, 1.0, opts);
      FAIL("expected QuadratureError");
    } catch (const QuadratureError& e) {
      CHECK(std::abs(e.best_value() - 0.2780) < 1e-3);
      CHECK(e.achieved_error() > 1e-14);
    }
    CHECK_THROWS_AS(integrate([](double x) { return 1 / x; }, -1.0, 1.0), QuadratureError);
    CHECK_THROWS_AS(integrate([](double) { return 0.0; }, 0.0, 1.0, QuadOptions{0.0, 4}),
                    DomainError);
    CHECK_THROWS_AS(integrate_panels([](double x) { return x; }, {1.0}), DomainError);
    CHECK_THROWS_AS(integrate_to_infinity([](double x) { return x; }, 0.0, Tail::algebraic),
                    DomainError);
  }
}
