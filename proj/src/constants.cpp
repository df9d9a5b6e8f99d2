#include "mstlab/constants.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "mstlab/errors.hpp"

namespace mstlab {
namespace {

const double kSqrtPiOver8 = std::sqrt(M_PI / 8.0);

// (1 - (1+x) e^{-x}) / x^2 = sum_{m>=2} (-1)^m (m-1) x^{m-2} / m!, for 0 < x <= 1.
double log_integrand_scaled_head(double x) {
  double sum = 0;
  double power = 1;  // x^{m-2}
  double fact = 2;   // m!
  for (int m = 2; m <= 26; ++m) {
    const double term = (m - 1) * power / fact;
    sum += (m % 2 == 0) ? term : -term;
    power *= x;
    fact *= (m + 1);
  }
  return std::log(sum);
}

// ln(1 - (1+x) e^{-x}) for x >= 1.
double log_integrand(double x) { return std::log1p(-(1.0 + x) * std::exp(-x)); }

// x^{-3} (e^{-x^3/24} - 1), finite as x -> 0.
double damped_cube(double x) {
  const double x3 = x * x * x;
  return std::expm1(-x3 / 24.0) / x3;
}

}  // namespace

double DualEstimate::difference() const {
  return std::abs(static_cast<double>(closed_form) - quadrature.value);
}

QuadResult log_integral(double tolerance) {
  QuadOptions opts;
  opts.tolerance = tolerance / 2;
  // ln(g(x)) = 2 ln x + ln(g(x)/x^2) on (0, 1]; int_0^1 2 ln x dx = -2.
  QuadResult head = integrate(log_integrand_scaled_head, 0.0, 1.0, opts);
  head.value -= 2.0;
  QuadResult tail = integrate_to_infinity(log_integrand, 1.0, Tail::exponential, 2.0, opts);
  return head + tail;
}

QuadResult c1(double tolerance) {
  PrecisionScope scope(40);
  QuadResult ilog = log_integral(tolerance);
  QuadResult out = ilog;
  out.value = static_cast<double>(-1 - zeta3() - Real(ilog.value) / 2);
  out.error_estimate = ilog.error_estimate / 2;
  return out;
}

DualEstimate c2a(double tolerance) {
  PrecisionScope scope(40);
  DualEstimate out;
  out.closed_form = -Real(1) / 8 * pow(Real(3), Real(-2) / 3) * boost::math::tgamma(Real(1) / 3);
  QuadOptions opts;
  opts.tolerance = tolerance / 2;
  auto f = [](double x) { return damped_cube(x); };  // = -x^{-3}(1 - e^{-x^3/24})
  out.quadrature = integrate(f, 0.0, 4.0, opts) +
                   integrate_to_infinity(f, 4.0, Tail::algebraic, 1.0, opts);
  if (out.difference() > 1e-6) {
    throw MethodDisagreement("c2a: closed form and quadrature disagree by " +
                             std::to_string(out.difference()));
  }
  return out;
}

DualEstimate c2b(double tolerance) {
  PrecisionScope scope(40);
  DualEstimate out;
  const Real pi = boost::math::constants::pi<Real>();
  out.closed_form =
      -Real(1) / 2 * pow(Real(3), Real(-1) / 6) * sqrt(pi) * boost::math::tgamma(Real(5) / 6);
  QuadOptions opts;
  opts.tolerance = tolerance / 2;
  auto f = [](double x) { return kSqrtPiOver8 * x * std::sqrt(x) * damped_cube(x); };
  out.quadrature = integrate(f, 0.0, 4.0, opts) +
                   integrate_to_infinity(f, 4.0, Tail::algebraic, 1.0, opts);
  if (out.difference() > 1e-6) {
    throw MethodDisagreement("c2b: closed form and quadrature disagree by " +
                             std::to_string(out.difference()));
  }
  return out;
}

PilTerm pil_summand(int k, const WrightTable& wright) {
  if (k < 1) throw DomainError("pil_summand: k must be >= 1");
  if (wright.max_order() < 2 * k + 1) {
    throw DomainError("pil_summand: Wright table must reach order " + std::to_string(2 * k + 1));
  }
  using boost::multiprecision::lgamma;
  const unsigned digits = wright.working_digits();
  PrecisionScope scope(digits + 10);
  const Real log24 = log(Real(24));
  const Real kk = k;
  // Each addend is formed as exp(sum of logarithms); the factors themselves
  // reach 10^{+-2500} by k = 1000.
  const Real lg_two_thirds = lgamma(kk - Real(2) / 3);
  const Real log_a = wright.log_w(2 * k) + (kk - 1) * log24 + lg_two_thirds;
  const Real log_b = wright.log_w(2 * k + 1) + (kk - Real(1) / 2) * log24 + lgamma(kk - Real(1) / 6);
  const Real log_c = lg_two_thirds - lgamma(kk) - log(Real(2));

  PilTerm out;
  out.k = k;
  out.addends = {exp(log_a), exp(log_b), -exp(log_c)};
  const Real sum = out.addends[0] + out.addends[1] + out.addends[2];
  out.value = pow(Real(24), Real(1) / 3) / 3 * sum;

  // Relative error of each addend ~ 10^{-digits} times the size of its logarithm.
  const double log_size = std::max(
      {1.0, std::abs(static_cast<double>(log_a)), std::abs(static_cast<double>(log_b)),
       std::abs(static_cast<double>(lgamma(kk)))});
  const double largest = static_cast<double>(std::max({abs(out.addends[0]), abs(out.addends[1]),
                                                       abs(out.addends[2])}));
  const double magnitude = std::abs(static_cast<double>(sum));
  out.certified_digits = magnitude > 0 ? static_cast<double>(digits) - std::log10(log_size) -
                                             std::log10(largest / magnitude)
                                       : 0.0;
  if (out.certified_digits < 12) {
    std::ostringstream os;
    os << "pil_summand: only " << out.certified_digits << " digits survive cancellation at k="
       << k;
    throw PrecisionError(os.str());
  }
  return out;
}

Real pil_tail_slope() { return -pow(Real(24), Real(1) / 3) / 3 / 6; }

SeriesEstimate c2c(int terms, bool tail, const WrightTable& wright) {
  if (terms < 100) throw DomainError("c2c: need at least 100 series terms");
  PrecisionScope scope(wright.working_digits() + 10);
  SeriesEstimate out;
  out.terms = terms;
  out.tail_applied = tail;
  out.partial = 0;
  for (int k = 1; k <= terms; ++k) out.partial += pil_summand(k, wright).value;
  out.tail = tail ? Real(pil_tail_slope() * hurwitz_zeta(Real(5) / 3, Real(terms + 1))) : Real(0);
  out.value = out.partial + out.tail;
  return out;
}

double psi_asymptotic_offset() {
  // With f(x) = c x^2 e^{-6x^2} (1 + a x^{-2}), c = 72 sqrt6/sqrt(pi), Laplace's
  // method gives int e^{tx} f = e^{t^2/24} (t^2/2 + 6 + 72 a + O(t^{-2})).
  return 6.0 + 72.0 * kDensitySecondOrder;
}

double c2c_integrand(double x, const DampedPsi2& psi2) {
  if (!(x > 0)) throw DomainError("c2c_integrand: x must be > 0");
  const double x3 = x * x * x;
  return psi2(x * std::sqrt(x)) / x3 - 0.5;
}

TailedIntegral c2c_integral(const DampedPsi2& psi2, double cutoff, double tolerance) {
  if (std::pow(cutoff, 1.5) > psi2.max_argument()) {
    throw TruncationError("c2c_integral: Wright table too short for cutoff " +
                              std::to_string(cutoff),
                          cutoff);
  }
  QuadOptions opts;
  opts.tolerance = tolerance;
  auto f = [&](double x) { return c2c_integrand(x, psi2); };
  TailedIntegral out;
  out.cutoff = cutoff;
  out.body = integrate_panels(f, {0.0, 2.0, 5.0, 10.0, cutoff}, opts);
  // Integrand ~ offset x^{-3} beyond the cutoff.
  out.tail = psi_asymptotic_offset() / (2 * cutoff * cutoff);
  return out;
}

IntegralForms c2_integral_forms(const DampedPsi2& psi2, double cutoff, double tolerance) {
  if (std::pow(cutoff, 1.5) > psi2.max_argument()) {
    throw TruncationError("c2_integral_forms: Wright table too short for cutoff " +
                              std::to_string(cutoff),
                          cutoff);
  }
  const double offset = psi_asymptotic_offset();
  QuadOptions opts;
  opts.tolerance = tolerance;
  IntegralForms out;

  // x-form: x^{-3} psi(x^{3/2}) e^{-x^3/24} - x^{-3} - sqrt(pi/8) x^{-3/2} - 1/2,
  // regrouped through psi = 1 + sqrt(pi/8) t + psi2 to avoid cancellation at small x.
  auto fx = [&](double x) {
    const double x3 = x * x * x;
    const double root = x * std::sqrt(x);
    return psi2(root) / x3 + (1.0 + kSqrtPiOver8 * root) * damped_cube(x) - 0.5;
  };
  out.x_form.cutoff = cutoff;
  out.x_form.body = integrate_panels(fx, {0.0, 2.0, 5.0, 10.0, cutoff}, opts);
  out.x_form.tail = (offset - 1.0) / (2 * cutoff * cutoff) - 2 * kSqrtPiOver8 / std::sqrt(cutoff);

  // y-form: (2/3) (y^{-2} psi(y) e^{-y^2/24} - y^{-2} - sqrt(pi/8) y^{-1} - 1/2) y^{-1/3}.
  auto gy = [&](double y) {
    const double y2 = y * y;
    return psi2(y) / y2 + (1.0 + kSqrtPiOver8 * y) * std::expm1(-y2 / 24.0) / y2 - 0.5;
  };
  // On [0, 1] substitute y = u^3 to absorb the y^{-1/3} endpoint singularity.
  auto fy_head = [&](double u) { return 2.0 * u * gy(u * u * u); };
  auto fy = [&](double y) { return 2.0 / 3.0 * gy(y) / std::cbrt(y); };
  const double y_cut = std::pow(cutoff, 1.5);
  QuadOptions half = opts;
  half.tolerance = tolerance / 2;
  out.y_form.cutoff = y_cut;
  out.y_form.body = integrate(fy_head, 0.0, 1.0, half) +
                    integrate_panels(fy, {1.0, 3.0, 10.0, 30.0, y_cut}, half);
  const double y43 = std::pow(y_cut, 4.0 / 3.0);
  out.y_form.tail = (offset - 1.0) / (2 * y43) - 2 * kSqrtPiOver8 / std::cbrt(y_cut);
  return out;
}

double big_F(double x, double lambda) {
  if (!(x > 0)) throw DomainError("big_F: x must be > 0");
  const double a = x * x * x / 6.0;
  const double b = x * x * lambda / 2.0;
  const double c = x * lambda * lambda / 2.0;
  const double polynomial = a - b + c;
  const double shifted = lambda - x / 2.0;
  const double square = x / 2.0 * shifted * shifted + x * x * x / 24.0;
  const double scale = std::abs(a) + std::abs(b) + std::abs(c);
  if (std::abs(polynomial - square) > 1e-12 * scale) {
    std::ostringstream os;
    os << "big_F: forms disagree at x=" << x << ", lambda=" << lambda;
    throw MethodDisagreement(os.str());
  }
  return square;
}

QuadResult f_of_lambda(double lambda, const DampedPsi2& psi2, double tolerance) {
  if (std::abs(lambda) > 10) throw DomainError("f_of_lambda: |lambda| must be <= 10");
  // psi2(x^{3/2}) e^{-F} = [psi2(t) e^{-t^2/24}] e^{-(x/2)(lambda - x/2)^2}; beyond
  // x = 2 max(lambda, 0) + 14 the Gaussian factor is below e^{-90}.
  const double x_max = 2 * std::max(lambda, 0.0) + 14.0;
  if (std::pow(x_max, 1.5) > psi2.max_argument()) {
    throw TruncationError("f_of_lambda: Wright table too short", x_max);
  }
  const double norm = 1.0 / std::sqrt(2 * M_PI);
  // x = u^2 makes the integrand smooth at the origin (it behaves like u^2).
  auto g = [&](double u) {
    const double x = u * u;
    const double shifted = lambda - x / 2.0;
    const double u4 = x * x;
    return norm * 2.0 * psi2(x * u) * std::exp(-x / 2.0 * shifted * shifted) / u4;
  };
  std::vector<double> breaks{0.0};
  if (lambda > 0.5) {
    const double peak = std::sqrt(2 * lambda);
    breaks.push_back(std::max(0.5, peak - 1.0));
    breaks.push_back(peak);
    breaks.push_back(peak + 1.0);
  }
  const double u_max = std::sqrt(x_max);
  if (breaks.back() >= u_max) breaks.pop_back();
  breaks.push_back(u_max);
  QuadOptions opts;
  opts.tolerance = tolerance;
  return integrate_panels(g, breaks, opts);
}

QuadResult lambda_integral(const DampedPsi2& psi2, double lo, double hi, double tolerance) {
  if (lo > 0 || hi < 0) throw DomainError("lambda_integral: need lo <= 0 <= hi");
  QuadOptions opts;
  opts.tolerance = tolerance / 2;
  const double inner = tolerance / 100;
  QuadResult total;
  auto below = [&](double lambda) { return f_of_lambda(lambda, psi2, inner).value; };
  auto above = [&](double lambda) { return f_of_lambda(lambda, psi2, inner).value - 1.0; };
  if (lo < 0) total = total + integrate(below, lo, 0.0, opts);
  if (hi > 0) total = total + integrate(above, 0.0, hi, opts);
  return total;
}

double gaussian_identity_residual(double x) {
  if (!(x > 0)) throw DomainError("gaussian_identity_residual: x must be > 0");
  const double closed = std::exp(-x * x * x / 24.0) * std::sqrt(2 * M_PI / x);
  const double center = x / 2.0;
  const double sigma = 1.0 / std::sqrt(x);
  auto g = [&](double lambda) {
    const double polynomial = x * x * x / 6.0 - x * x * lambda / 2.0 + x * lambda * lambda / 2.0;
    return std::exp(-polynomial);
  };
  std::vector<double> breaks;
  for (int i = -14; i <= 14; i += 2) breaks.push_back(center + i * sigma);
  QuadOptions opts;
  opts.tolerance = 1e-13 * closed;
  const QuadResult numeric = integrate_panels(g, breaks, opts);
  return std::abs(numeric.value - closed) / closed;
}

ConstantsReport c2_total(const ConstantsOptions& options) {
  if (options.series_terms < 100) throw DomainError("c2_total: need at least 100 series terms");
  PrecisionScope scope(options.digits + 10);
  ConstantsReport report;
  // The series needs w up to 2K+1; the direct integrals need psi2 up to cutoff^{3/2}.
  report.wright_order = std::max(2 * options.series_terms + 1, 3001);
  const WrightTable wright = wright_table(report.wright_order, options.digits);
  const DampedPsi2 damped(wright);

  report.zeta2 = zeta2();
  report.zeta3 = zeta3();
  report.log_integral = log_integral(options.tolerance);
  report.c1 = report.log_integral;
  report.c1.value = static_cast<double>(-1 - report.zeta3 - Real(report.log_integral.value) / 2);
  report.c1.error_estimate = report.log_integral.error_estimate / 2;
  report.c2a = c2a(options.tolerance);
  report.c2b = c2b(options.tolerance);
  report.c2c_series = c2c(options.series_terms, options.tail, wright);
  report.c2c_partial = report.c2c_series.partial;
  report.c2c = report.c2c_series.value;
  report.c2c_integral = c2c_integral(damped, options.cutoff, options.tolerance);
  report.c2 = report.c2a.closed_form + report.c2b.closed_form + report.c2c;
  report.direct = c2_integral_forms(damped, options.cutoff, options.tolerance);
  const double forms_gap = std::abs(report.direct.x_form.value() - report.direct.y_form.value());
  if (forms_gap > 1e-8) {
    throw MethodDisagreement("c2_total: x- and y-forms of c2 differ by " +
                             std::to_string(forms_gap));
  }
  if (options.lambda_integral) report.lambda_integral = lambda_integral(damped);
  return report;
}

}  // namespace mstlab
