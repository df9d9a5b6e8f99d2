#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <vector>

namespace mstlab {

struct QuadResult {
  double value = 0;
  double error_estimate = 0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<double(double)>;

/// Tail behaviour of an integrand on [a, inf), selecting the substitution that
/// maps it to [0, 1):
///  - exponential: x = a - scale ln(1 - v), so e^{-x/scale} becomes constant in v;
///  - algebraic:   x = a / (1 - v)^2 (a > 0), so x^{-p} dx is bounded for p >= 3/2.
enum class Tail { exponential, algebraic };

struct QuadOptions {
  double tolerance = 1e-10;  ///< absolute error target
  unsigned max_depth = 16;   ///< at most 2^max_depth panels
};

/// Globally adaptive Gauss-Kronrod (21 points) on [a, b]; the error estimate
/// is the sum of per-panel Kronrod-Gauss differences. Throws QuadratureError,
/// carrying the best value, when the error estimate exceeds the tolerance.
QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& options = {});

/// Sum of integrals over consecutive panels [b0,b1], [b1,b2], ...; the
/// tolerance is shared evenly between panels.
QuadResult integrate_panels(const Integrand& f, const std::vector<double>& breakpoints,
                            const QuadOptions& options = {});

/// Integral over [a, inf) through the substitution named by `tail`.
QuadResult integrate_to_infinity(const Integrand& f, double a, Tail tail, double scale = 1.0,
                                 const QuadOptions& options = {});

/// Adds two results, combining error estimates and evaluation counts.
QuadResult operator+(const QuadResult& lhs, const QuadResult& rhs);

}  // namespace mstlab
