#include "mstlab/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>
#include <queue>
#include <sstream>

#include "mstlab/errors.hpp"

namespace mstlab {

QuadResult operator+(const QuadResult& lhs, const QuadResult& rhs) {
  return {lhs.value + rhs.value, lhs.error_estimate + rhs.error_estimate,
          lhs.evaluations + rhs.evaluations};
}

namespace {

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// One 21-point Kronrod panel with its embedded 10-point Gauss rule; the error
// is |K - G| scaled to the panel.
template <class F>
Panel kronrod_panel(F& f, double a, double b) {
  double local_error = 0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 21>::integrate(f, a, b, 0, 0.0, &local_error);
  return {a, b, value, local_error * 0.5 * (b - a)};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, const QuadOptions& options) {
  if (!(options.tolerance > 0)) throw DomainError("integrate: tolerance must be positive");
  QuadResult out;
  if (a == b) return out;
  std::size_t count = 0;
  auto counted = [&](double x) {
    ++count;
    const double y = f(x);
    if (!std::isfinite(y)) {
      std::ostringstream os;
      os << "integrate: integrand is not finite at x=" << x;
      throw QuadratureError(os.str(), std::numeric_limits<double>::quiet_NaN(),
                            std::numeric_limits<double>::infinity());
    }
    return y;
  };

  // Global adaptive bisection: always split the panel with the largest error.
  std::priority_queue<Panel> panels;
  panels.push(kronrod_panel(counted, a, b));
  double value = panels.top().value;
  double error = panels.top().error;
  const std::size_t max_panels = std::size_t{1} << options.max_depth;
  while (error > options.tolerance && panels.size() < max_panels) {
    Panel worst = panels.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) break;
    panels.pop();
    Panel left = kronrod_panel(counted, worst.a, mid);
    Panel right = kronrod_panel(counted, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  // Re-sum to shed the drift of the running updates.
  value = 0;
  error = 0;
  while (!panels.empty()) {
    value += panels.top().value;
    error += panels.top().error;
    panels.pop();
  }
  out.value = value;
  out.error_estimate = error;
  out.evaluations = count;
  if (out.error_estimate > options.tolerance) {
    std::ostringstream os;
    os << "integrate: error estimate " << out.error_estimate << " above tolerance "
       << options.tolerance << " on [" << a << ", " << b << "]";
    throw QuadratureError(os.str(), out.value, out.error_estimate);
  }
  return out;
}

QuadResult integrate_panels(const Integrand& f, const std::vector<double>& breakpoints,
                            const QuadOptions& options) {
  if (breakpoints.size() < 2) throw DomainError("integrate_panels: need two breakpoints");
  QuadOptions panel = options;
  panel.tolerance = options.tolerance / static_cast<double>(breakpoints.size() - 1);
  QuadResult total;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    total = total + integrate(f, breakpoints[i], breakpoints[i + 1], panel);
  }
  return total;
}

QuadResult integrate_to_infinity(const Integrand& f, double a, Tail tail, double scale,
                                 const QuadOptions& options) {
  if (!(scale > 0)) throw DomainError("integrate_to_infinity: scale must be positive");
  if (tail == Tail::exponential) {
    auto g = [&](double v) {
      const double x = a - scale * std::log1p(-v);
      return f(x) * scale / (1.0 - v);
    };
    return integrate(g, 0.0, 1.0, options);
  }
  if (!(a > 0)) throw DomainError("integrate_to_infinity: algebraic tail needs a > 0");
  auto g = [&](double v) {
    const double s = 1.0 - v;
    const double x = a / (s * s);
    return f(x) * 2.0 * a / (s * s * s);
  };
  return integrate(g, 0.0, 1.0, options);
}

}  // namespace mstlab
