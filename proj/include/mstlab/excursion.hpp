#pragma once

// Moments of the Brownian excursion area B, Wright's constants
// w_l = E(B^l) / l!, and the moment generating function psi(t) = E e^{tB}.

#include <iosfwd>
#include <vector>

#include "mstlab/precision.hpp"

namespace mstlab {

/// m_l = E(B^l) for l = 0..max_order.
class MomentTable {
 public:
  int max_order() const noexcept { return static_cast<int>(moments_.size()) - 1; }
  unsigned working_digits() const noexcept { return digits_; }
  const Real& operator[](int order) const { return moments_.at(order); }
  const std::vector<Real>& values() const noexcept { return moments_; }

 private:
  friend MomentTable excursion_moments(int max_order, unsigned digits);
  friend class WrightTable;
  std::vector<Real> moments_;
  std::vector<Real> log_wright_;  // ln w_l, kept so the Wright table avoids l! round trips
  unsigned digits_ = 0;
};

/// Computes m_0..m_max_order with the Louchard-Takacs recursion
///   K_0 = -1/2,  K_l = (3l-4)/4 K_{l-1} + sum_{j=1}^{l-1} K_j K_{l-j},
///   E(B^l) = 4 sqrt(pi) 2^{-l/2} l! K_l / Gamma((3l-1)/2).
/// Every K_l with l >= 1 is positive, so the recursion itself is cancellation
/// free; log-convexity of the result is still checked and a violation raises
/// PrecisionError. Requires digits >= 30.
MomentTable excursion_moments(int max_order, unsigned digits = kDefaultDigits);

/// w_l = m_l / l!, l = 0..max_order, plus double-precision logarithms for fast
/// series evaluation.
class WrightTable {
 public:
  explicit WrightTable(const MomentTable& moments);

  int max_order() const noexcept { return static_cast<int>(w_.size()) - 1; }
  unsigned working_digits() const noexcept { return digits_; }
  const Real& operator[](int order) const { return w_.at(order); }
  const std::vector<Real>& values() const noexcept { return w_; }
  const Real& log_w(int order) const { return log_w_.at(order); }
  const std::vector<double>& log_w_double() const noexcept { return log_w_d_; }

 private:
  std::vector<Real> w_;
  std::vector<Real> log_w_;
  std::vector<double> log_w_d_;
  unsigned digits_ = 0;
};

WrightTable wright_table(int max_order, unsigned digits = kDefaultDigits);

/// CSV rows "l,m_l,w_l".
void write_moments_csv(std::ostream& out, const MomentTable& moments, int digits = 30);

/// A truncated power series value with a bound on the neglected tail.
struct SeriesValue {
  Real value;
  Real truncation_bound;
  int terms = 0;
};

/// psi(t) = sum_{l=0}^{L} w_l t^l with L = wright.max_order(). The tail bound
/// uses the geometric majorant of the ratios w_{l+1} t / w_l, which decrease in
/// l. Throws TruncationError when the bound exceeds `tolerance`.
SeriesValue psi(const Real& t, const WrightTable& wright, const Real& tolerance = Real("1e-25"));

/// psi2(t) = psi(t) - 1 - sqrt(pi/8) t = sum_{l>=2} w_l t^l.
SeriesValue psi2(const Real& t, const WrightTable& wright, const Real& tolerance = Real("1e-25"));

/// Fast double-precision evaluator of the damped series psi2(t) e^{-t^2/24}
/// used inside quadrature, built from ln w_l. Values stay O(t^2) even when
/// psi2(t) itself is astronomically large.
class DampedPsi2 {
 public:
  explicit DampedPsi2(const WrightTable& wright, double relative_tolerance = 1e-15);

  /// psi2(t) e^{-t^2/24}; throws TruncationError if the table is too short for t.
  double operator()(double t) const;

  /// Largest t for which the table certifies the relative tolerance.
  double max_argument() const noexcept { return max_argument_; }

 private:
  std::vector<double> log_w_;
  double relative_tolerance_;
  double max_argument_ = 0;
};

/// Leading term (72 sqrt 6 / sqrt pi) x^2 e^{-6 x^2} of the excursion area
/// density, accurate as x grows; requires x > 0.
double excursion_density_approx(double x);

/// Second-order coefficient of the density expansion:
/// f(x) = leading(x) (1 + kDensitySecondOrder x^{-2} + O(x^{-4})).
inline constexpr double kDensitySecondOrder = -1.0 / 9.0;

}  // namespace mstlab
