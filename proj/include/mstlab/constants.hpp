#pragma once

// The constants of the expansion E(L_n) = zeta(3) + c1/n + (c2 + o(1))/n^{4/3}:
// c1, the three n^{-4/3} coefficients c2a (trees), c2b (unicyclic
// components) and c2c (complex components), and the critical-window scaling
// functions F(x, lambda) and f(lambda).

#include <array>
#include <optional>

#include "mstlab/excursion.hpp"
#include "mstlab/precision.hpp"
#include "mstlab/quadrature.hpp"

namespace mstlab {

/// I_log = int_0^inf ln(1 - (1+x) e^{-x}) dx (about -4.4811).
QuadResult log_integral(double tolerance = 1e-10);

/// c1 = -1 - zeta(3) - I_log / 2.
QuadResult c1(double tolerance = 1e-10);

/// A constant known in closed form and by independent quadrature.
struct DualEstimate {
  Real closed_form;
  QuadResult quadrature;
  double difference() const;  ///< |closed_form - quadrature.value|
};

/// Tree coefficient: -(1/8) 3^{-2/3} Gamma(1/3) and -int_0^inf x^{-3} (1 - e^{-x^3/24}) dx.
/// Throws MethodDisagreement when the two differ by more than 1e-6.
DualEstimate c2a(double tolerance = 1e-10);

/// Unicyclic coefficient: -(1/2) 3^{-1/6} sqrt(pi) Gamma(5/6) and
/// -sqrt(pi/8) int_0^inf x^{-3/2} (1 - e^{-x^3/24}) dx.
DualEstimate c2b(double tolerance = 1e-10);

/// k-th term of the complex-component series,
///   (24^{1/3}/3) (w_{2k} 24^{k-1} Gamma(k-2/3) + w_{2k+1} 24^{k-1/2} Gamma(k-1/6)
///                 - Gamma(k-2/3) / (2 Gamma(k))),
/// whose three addends are each ~k^{-2/3} while the sum is ~k^{-5/3}.
struct PilTerm {
  int k = 0;
  Real value;
  std::array<Real, 3> addends;  ///< without the 24^{1/3}/3 prefactor
  double certified_digits = 0;  ///< significant digits of `value` surviving cancellation
};

/// Requires the Wright table to reach order 2k+1. Throws PrecisionError when
/// fewer than 12 digits survive the cancellation.
PilTerm pil_summand(int k, const WrightTable& wright);

/// Coefficient s in the summand asymptotics term_k ~ s k^{-5/3}, including
/// the 24^{1/3}/3 prefactor.
Real pil_tail_slope();

struct SeriesEstimate {
  int terms = 0;
  bool tail_applied = false;
  Real partial;  ///< sum_{k=1}^{terms} term_k
  Real tail;     ///< pil_tail_slope() * zeta(5/3, terms+1); not rigorous
  Real value;    ///< partial (+ tail)
};

/// Complex-component coefficient from the series. Requires terms >= 100.
SeriesEstimate c2c(int terms, bool tail, const WrightTable& wright);

/// Leading large-t behaviour of the damped generating function:
/// psi(t) e^{-t^2/24} = t^2/2 + offset + O(t^{-2}), from the density expansion.
double psi_asymptotic_offset();

/// Integrals truncated at `cutoff` plus the analytic large-x tail implied by
/// psi_asymptotic_offset(); the neglected remainder is O(cutoff^{-5}).
struct TailedIntegral {
  QuadResult body;
  double tail = 0;
  double cutoff = 0;
  double value() const { return body.value + tail; }
};

/// int_0^inf (x^{-3} psi2(x^{3/2}) e^{-x^3/24} - 1/2) dx.
TailedIntegral c2c_integral(const DampedPsi2& psi2, double cutoff = 30, double tolerance = 1e-10);

/// The integrand of c2c_integral at x.
double c2c_integrand(double x, const DampedPsi2& psi2);

/// The two defining integrals of c2, in x and in y = x^{3/2}.
struct IntegralForms {
  TailedIntegral x_form;
  TailedIntegral y_form;
};

IntegralForms c2_integral_forms(const DampedPsi2& psi2, double cutoff = 30,
                               double tolerance = 1e-10);

/// F(x, lambda) = x^3/6 - x^2 lambda/2 + x lambda^2/2 = (x/2)(lambda - x/2)^2 + x^3/24.
/// Evaluates both forms, throws MethodDisagreement if they differ beyond 1e-12
/// relative, and returns the completed-square form. Requires x > 0.
double big_F(double x, double lambda);

/// f(lambda) = (2 pi)^{-1/2} int_0^inf psi2(x^{3/2}) e^{-F(x, lambda)} x^{-5/2} dx,
/// the limiting expected number of complex components at p = 1/n + lambda n^{-4/3}.
/// Requires |lambda| <= 10.
QuadResult f_of_lambda(double lambda, const DampedPsi2& psi2, double tolerance = 1e-9);

/// int_lo^hi (f(lambda) - 1{lambda > 0}) d lambda; requires lo <= 0 <= hi.
QuadResult lambda_integral(const DampedPsi2& psi2, double lo = -8, double hi = 8,
                           double tolerance = 1e-6);

/// |int e^{-F(x, lambda)} d lambda - e^{-x^3/24} sqrt(2 pi / x)| relative to the
/// closed form, with the integral done numerically on the polynomial form of F.
double gaussian_identity_residual(double x);

struct ConstantsOptions {
  int series_terms = 1000;
  bool tail = true;
  unsigned digits = kDefaultDigits;
  double tolerance = 1e-10;
  double cutoff = 30;            ///< truncation point of the direct integrals
  bool lambda_integral = false;  ///< also integrate f(lambda) over [-8, 8]
};

struct ConstantsReport {
  Real zeta2;
  Real zeta3;
  QuadResult log_integral;
  QuadResult c1;
  DualEstimate c2a;
  DualEstimate c2b;
  SeriesEstimate c2c_series;  ///< tail as requested
  Real c2c_partial;           ///< series without tail
  Real c2c;                   ///< series value as requested
  TailedIntegral c2c_integral;
  Real c2;                    ///< c2a + c2b + c2c
  IntegralForms direct;        ///< c2 from the defining integrals
  std::optional<QuadResult> lambda_integral;
  int wright_order = 0;
};

/// Assembles every constant. Throws MethodDisagreement when the two integral
/// forms of c2 differ by more than 1e-8.
ConstantsReport c2_total(const ConstantsOptions& options = {});

}  // namespace mstlab
