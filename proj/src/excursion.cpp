#include "mstlab/excursion.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "mstlab/errors.hpp"

namespace mstlab {

MomentTable excursion_moments(int max_order, unsigned digits) {
  if (max_order < 0) throw DomainError("excursion_moments: order must be >= 0");
  if (digits < 30) throw DomainError("excursion_moments: digits must be >= 30");
  // Guard digits absorb the rounding of the O(L^2) convolution sums.
  PrecisionScope scope(digits + 10);

  std::vector<Real> K(max_order + 1);
  if (max_order >= 0) K[0] = Real(-1) / 2;
  for (int l = 1; l <= max_order; ++l) {
    Real s = Real(3 * l - 4) / 4 * K[l - 1];
    for (int j = 1; j <= (l - 1) / 2; ++j) s += 2 * K[j] * K[l - j];
    if ((l - 1) % 2 == 1) {
      const int mid = (l) / 2;
      s += K[mid] * K[mid];
    }
    K[l] = s;
  }

  MomentTable table;
  table.digits_ = digits;
  table.moments_.resize(max_order + 1);
  table.log_wright_.resize(max_order + 1);
  const Real log_pi = log(boost::math::constants::pi<Real>());
  const Real log2 = log(Real(2));
  table.moments_[0] = 1;
  table.log_wright_[0] = 0;
  for (int l = 1; l <= max_order; ++l) {
    if (!(K[l] > 0)) {
      throw PrecisionError("excursion_moments: nonpositive recursion value at order " +
                           std::to_string(l));
    }
    Real log_w = log(Real(4)) + log_pi / 2 - Real(l) / 2 * log2 + log(K[l]) -
                 boost::multiprecision::lgamma(Real(3 * l - 1) / 2);
    table.log_wright_[l] = log_w;
    table.moments_[l] = exp(log_w + log_factorial(l));
  }

  for (int l = 1; l + 1 <= max_order; ++l) {
    const auto& m = table.moments_;
    if (m[l] * m[l] > m[l - 1] * m[l + 1]) {
      throw PrecisionError("excursion_moments: log-convexity fails at order " +
                           std::to_string(l) + "; increase digits");
    }
  }
  return table;
}

WrightTable::WrightTable(const MomentTable& moments) : digits_(moments.working_digits()) {
  PrecisionScope scope(digits_ + 10);
  const int L = moments.max_order();
  w_.resize(L + 1);
  log_w_.resize(L + 1);
  log_w_d_.resize(L + 1);
  for (int l = 0; l <= L; ++l) {
    log_w_[l] = moments.log_wright_[l];
    w_[l] = l == 0 ? Real(1) : Real(exp(log_w_[l]));
    log_w_d_[l] = static_cast<double>(log_w_[l]);
  }
}

WrightTable wright_table(int max_order, unsigned digits) {
  return WrightTable(excursion_moments(max_order, digits));
}

void write_moments_csv(std::ostream& out, const MomentTable& moments, int digits) {
  out << "l,m_l,w_l\n";
  PrecisionScope scope(moments.working_digits() + 10);
  for (int l = 0; l <= moments.max_order(); ++l) {
    Real w = moments[l] / exp(log_factorial(l));
    out << l << ',' << to_decimal(moments[l], digits) << ',' << to_decimal(w, digits) << '\n';
  }
}

namespace {

SeriesValue psi_from(int first, const Real& t, const WrightTable& wright, const Real& tolerance) {
  if (t < 0) throw DomainError("psi: t must be >= 0");
  PrecisionScope scope(wright.working_digits() + 10);
  const int L = wright.max_order();
  SeriesValue out;
  out.value = 0;
  out.truncation_bound = 0;
  out.terms = 0;
  if (L < first) {
    out.truncation_bound = std::numeric_limits<double>::infinity();
  }
  Real power = pow(t, first);
  for (int l = first; l <= L; ++l) {
    out.value += wright[l] * power;
    power *= t;
    ++out.terms;
  }
  if (t > 0 && L >= first && L >= 1) {
    // Tail <= w_L t^L * rho / (1 - rho) with rho = t w_L / w_{L-1} >= every later ratio.
    Real last = wright[L] * pow(t, L);
    Real rho = t * wright[L] / wright[L - 1];
    out.truncation_bound = rho < 1 ? Real(last * rho / (1 - rho))
                                   : Real(std::numeric_limits<double>::infinity());
  }
  if (out.truncation_bound > tolerance) {
    throw TruncationError("psi: truncation at order " + std::to_string(L) + " leaves bound " +
                              to_decimal(out.truncation_bound, 6) + " above tolerance",
                          static_cast<double>(out.truncation_bound));
  }
  return out;
}

}  // namespace

SeriesValue psi(const Real& t, const WrightTable& wright, const Real& tolerance) {
  return psi_from(0, t, wright, tolerance);
}

SeriesValue psi2(const Real& t, const WrightTable& wright, const Real& tolerance) {
  return psi_from(2, t, wright, tolerance);
}

DampedPsi2::DampedPsi2(const WrightTable& wright, double relative_tolerance)
    : log_w_(wright.log_w_double()), relative_tolerance_(relative_tolerance) {
  if (log_w_.size() < 4) throw DomainError("DampedPsi2: Wright table too short");
  // Bisection for the largest certified argument.
  double lo = 0, hi = 1;
  auto ok = [&](double t) {
    try {
      (void)(*this)(t);
      return true;
    } catch (const TruncationError&) {
      return false;
    }
  };
  max_argument_ = std::numeric_limits<double>::infinity();
  while (ok(hi) && hi < 1e6) {
    lo = hi;
    hi *= 2;
  }
  for (int i = 0; i < 60; ++i) {
    double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  max_argument_ = lo;
}

double DampedPsi2::operator()(double t) const {
  if (t < 0) throw DomainError("DampedPsi2: t must be >= 0");
  if (t == 0) return 0.0;
  const int L = static_cast<int>(log_w_.size()) - 1;
  const double log_t = std::log(t);
  const double damping = t * t / 24.0;
  double sum = 0;
  bool past_peak = false;
  double prev = -std::numeric_limits<double>::infinity();
  int l = 2;
  for (; l <= L; ++l) {
    const double log_term = log_w_[l] + l * log_t - damping;
    if (log_term < prev) past_peak = true;
    prev = log_term;
    const double term = std::exp(log_term);
    sum += term;
    if (past_peak && term < 1e-20 * sum) break;
  }
  if (l > L) {
    const double log_rho = log_w_[L] - log_w_[L - 1] + log_t;
    const double last = std::exp(log_w_[L] + L * log_t - damping);
    const double rho = std::exp(log_rho);
    const double bound = rho < 1 ? last * rho / (1 - rho) : std::numeric_limits<double>::infinity();
    if (bound > relative_tolerance_ * sum) {
      throw TruncationError("DampedPsi2: Wright table too short for t=" + std::to_string(t),
                            sum > 0 ? bound / sum : bound);
    }
  }
  return sum;
}

double excursion_density_approx(double x) {
  if (!(x > 0)) throw DomainError("excursion_density_approx: x must be > 0");
  const double c = 72.0 * std::sqrt(6.0) / std::sqrt(M_PI);
  return c * x * x * std::exp(-6.0 * x * x);
}

}  // namespace mstlab
