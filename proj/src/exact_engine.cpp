#include "mstlab/exact_engine.hpp"

#include <ostream>
#include <string>

#include "mstlab/errors.hpp"

namespace mstlab {
namespace {

long pairs(long k) { return k * (k - 1) / 2; }

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

Rational ratio(const BigInt& numerator, const BigInt& denominator) {
  Rational out(numerator, denominator);
  out.canonicalize();
  return out;
}

Rational power(const Rational& base, unsigned long exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

void check_term_domain(int n, int k, int j) {
  if (k < 1 || k > n) {
    throw DomainError("component term: need 1 <= k <= n (n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  if (j < -1 || k + j > pairs(k)) {
    throw DomainError("component term: edge count k+j=" + std::to_string(k + j) +
                      " infeasible for k=" + std::to_string(k));
  }
}

// k(n-k) + C(k,2): pairs with at least one endpoint in a fixed k-set.
long touching_pairs(long n, long k) { return k * (n - k) + pairs(k); }

// ln B(k, k+j) at the current precision.
Real log_b(int n, int k, int j) {
  using boost::multiprecision::lgamma;
  const long m = touching_pairs(n, k);
  return lgamma(Real(n + 1)) - lgamma(Real(n - k + 1)) + lgamma(Real(m - k - j + 1)) -
         lgamma(Real(m + 2));
}

void check_float_args(int n, unsigned digits) {
  if (n < 2) throw DomainError("float component sum: n must be >= 2");
  if (digits < 30) throw DomainError("float component sum: digits must be >= 30");
}

}  // namespace

Rational b_term(int n, int k, int j) {
  check_term_domain(n, k, j);
  const long m = touching_pairs(n, k);
  return ratio(factorial(n) * factorial(m - k - j), factorial(n - k) * factorial(m + 1));
}

Rational a_term(int n, int k, int j, const CountTable& table) {
  check_term_domain(n, k, j);
  const long m = touching_pairs(n, k);
  // C(n,k) C(k,k+j) int_0^1 p^{k+j} (1-p)^{m-k-j} dp, the Beta integral in factorials.
  return ratio(binomial(n, k) * table.at(k, k + j) * factorial(k + j) * factorial(m - k - j),
               factorial(m + 1));
}

ABTerm ab_term(int n, int k, int j, const CountTable& table) {
  return ABTerm{k, j, a_term(n, k, j, table), b_term(n, k, j)};
}

Rational expected_component_count(int n, const Rational& p, const CountTable& table) {
  if (n < 1) throw DomainError("expected_component_count: n must be >= 1");
  if (p < 0 || p > 1) throw DomainError("expected_component_count: p must lie in [0, 1]");
  const Rational q = 1 - p;
  Rational total = 0;
  for (int k = 1; k <= n; ++k) {
    const long m = touching_pairs(n, k);
    const BigInt choose = binomial(n, k);
    for (long edges = k - 1; edges <= pairs(k); ++edges) {
      total += Rational(choose * table.at(k, static_cast<int>(edges))) * power(p, edges) *
               power(q, m - edges);
    }
  }
  return total;
}

Rational expected_vertex_mass(int n, const Rational& p, const CountTable& table) {
  if (n < 1) throw DomainError("expected_vertex_mass: n must be >= 1");
  if (p < 0 || p > 1) throw DomainError("expected_vertex_mass: p must lie in [0, 1]");
  const Rational q = 1 - p;
  Rational total = 0;
  for (int k = 1; k <= n; ++k) {
    const long m = touching_pairs(n, k);
    const BigInt choose = binomial(n, k);
    for (long edges = k - 1; edges <= pairs(k); ++edges) {
      total += Rational(k * choose * table.at(k, static_cast<int>(edges))) * power(p, edges) *
               power(q, m - edges);
    }
  }
  return total;
}

ExactExpectation exact_expected_mst(int n, const CountTable& table, const ExactOptions& options) {
  if (n < 2) throw DomainError("exact_expected_mst: n must be >= 2");
  if (n > options.max_n) {
    throw ResourceError("exact_expected_mst: n=" + std::to_string(n) + " exceeds the bound " +
                        std::to_string(options.max_n));
  }
  if (table.k_max() < n) throw DomainError("exact_expected_mst: count table too small");
  if (table.max_edges() && *table.max_edges() < pairs(n)) {
    throw DomainError("exact_expected_mst: count table is edge-capped");
  }

  ExactExpectation out;
  out.n = n;
  out.tree_part = 0;
  out.unicyclic_part = 0;
  out.complex_part = 0;
  for (int k = 1; k <= n; ++k) {
    const long m = touching_pairs(n, k);
    const BigInt choose = binomial(n, k);
    const BigInt denominator = factorial(m + 1);
    BigInt complex_numerator = 0;
    for (long edges = k - 1; edges <= pairs(k); ++edges) {
      BigInt numerator = table.at(k, static_cast<int>(edges)) * factorial(edges) *
                         factorial(m - edges);
      const long j = edges - k;
      if (j == -1) {
        out.tree_part += ratio(choose * numerator, denominator);
      } else if (j == 0) {
        out.unicyclic_part += ratio(choose * numerator, denominator);
      } else {
        complex_numerator += numerator;
      }
    }
    if (complex_numerator != 0) out.complex_part += ratio(choose * complex_numerator, denominator);
  }
  out.total = out.tree_part + out.unicyclic_part + out.complex_part - 1;
  return out;
}

Real tree_part_float(int n, unsigned digits) {
  check_float_args(n, digits);
  // ln Gamma at arguments near n^2/2 has magnitude ~n^2 ln n; guard digits cover it.
  PrecisionScope scope(digits + 20);
  Real sum = 0;
  for (int k = 1; k <= n; ++k) {
    // A(k,k-1) = k^{k-2} (k-1)!/k! B(k,k-1) = k^{k-3} B(k,k-1).
    sum += exp(Real(k - 3) * log(Real(k)) + log_b(n, k, -1));
  }
  return sum;
}

Real renyi_scaled_term(int k, unsigned digits) {
  if (k < 3) throw DomainError("renyi_scaled_term: k must be >= 3");
  PrecisionScope scope(digits + 10);
  const Real cutoff = pow(Real(10), -static_cast<long>(digits) - 8);
  Real product = 1;
  Real sum = 0;
  for (int d = 1; d <= k - 1; ++d) {
    product *= static_cast<unsigned long>(k - d);
    product /= static_cast<unsigned long>(k);
    if (d >= 2) {
      sum += product;
      if (product < cutoff * sum) break;
    }
  }
  Real kk = k;
  return sum / (kk * kk);
}

Real unicyclic_part_float(int n, unsigned digits) {
  check_float_args(n, digits);
  PrecisionScope scope(digits + 20);
  Real sum = 0;
  for (int k = 3; k <= n; ++k) {
    // A(k,k) = C(k,k) B(k,k) with C(k,k) = k^{k+1} r_k / 2.
    Real r = renyi_scaled_term(k, digits + 10);
    sum += r / 2 * exp(Real(k + 1) * log(Real(k)) + log_b(n, k, 0));
  }
  return sum;
}

UnicyclicSeries unicyclic_series(int terms, unsigned digits) {
  if (terms < 3) throw DomainError("unicyclic_series: need at least 3 terms");
  PrecisionScope scope(digits + 10);
  UnicyclicSeries out;
  out.terms = terms;
  out.partial = 0;
  for (int k = 3; k <= terms; ++k) out.partial += renyi_scaled_term(k, digits);

  const Real a = Real(terms + 1);
  auto hz = [&](const Real& s) { return hurwitz_zeta(s, a); };
  const Real root = sqrt(boost::math::constants::pi<Real>() / 2);
  const Real c_half = Real(1) / 12;
  const Real c_one = Real(1) / 288;
  const Real c_three_half = Real(1) / 10368 - Real(1) / 360;
  out.tail = root * (hz(Real(3) / 2) + c_half * hz(Real(5) / 2) + c_one * hz(Real(7) / 2) +
                     c_three_half * hz(Real(9) / 2)) -
             Real(7) / 3 * hz(Real(2)) + Real(131) / 135 * hz(Real(3)) +
             Real(8) / 2835 * hz(Real(4)) + Real(16) / 8505 * hz(Real(5));
  out.total = out.partial + out.tail;
  return out;
}

void write_exact_csv_header(std::ostream& out) {
  out << "n,total,total_decimal,tree,tree_decimal,unicyclic,unicyclic_decimal,complex,"
         "complex_decimal\n";
}

void write_exact_csv_row(std::ostream& out, const ExactExpectation& e) {
  auto both = [&](const Rational& r) {
    out << ',' << to_fraction_string(r) << ',' << to_decimal(r, 30);
  };
  out << e.n;
  both(e.total);
  both(e.tree_part);
  both(e.unicyclic_part);
  both(e.complex_part);
  out << '\n';
}

}  // namespace mstlab
