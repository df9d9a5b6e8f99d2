#include "mstlab/graph_counts.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "mstlab/errors.hpp"

namespace mstlab {
namespace {

long pairs(long k) { return k * (k - 1) / 2; }

BigInt binomial(unsigned long n, unsigned long r) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

const BigInt& zero() {
  static const BigInt z = 0;
  return z;
}

}  // namespace

bool CountTable::covers(int k, int edges) const noexcept {
  if (k < 1 || k > k_max_ || edges < 0) return false;
  if (edges > pairs(k)) return true;
  return edges < static_cast<int>(rows_[k].size());
}

const BigInt& CountTable::at(int k, int edges) const {
  if (k < 1 || k > k_max_) {
    throw DomainError("CountTable: k=" + std::to_string(k) + " outside [1, " +
                      std::to_string(k_max_) + "]");
  }
  if (edges < k - 1 || edges > pairs(k)) return zero();
  if (edges >= static_cast<int>(rows_[k].size())) {
    throw DomainError("CountTable: entry (" + std::to_string(k) + ", " + std::to_string(edges) +
                      ") beyond the edge cap");
  }
  return rows_[k][edges];
}

BigInt CountTable::row_sum(int k) const {
  if (k < 1 || k > k_max_) throw DomainError("CountTable::row_sum: k out of range");
  if (static_cast<long>(rows_[k].size()) <= pairs(k)) {
    throw DomainError("CountTable::row_sum: row " + std::to_string(k) + " is capped");
  }
  BigInt total = 0;
  for (const auto& c : rows_[k]) total += c;
  return total;
}

void CountTable::write_csv(std::ostream& out) const {
  out << "k,l,C\n";
  for (int k = 1; k <= k_max_; ++k) {
    for (std::size_t l = 0; l < rows_[k].size(); ++l) {
      if (rows_[k][l] != 0) out << k << ',' << l << ',' << rows_[k][l].get_str() << '\n';
    }
  }
}

CountTable build_count_table(int k_max, const CountTableOptions& options) {
  if (k_max < 1) throw DomainError("build_count_table: k_max must be >= 1");
  if (k_max > options.vertex_budget) {
    throw ResourceError("build_count_table: k_max=" + std::to_string(k_max) +
                        " exceeds the vertex budget " + std::to_string(options.vertex_budget));
  }
  if (options.max_edges && *options.max_edges < 0) {
    throw DomainError("build_count_table: max_edges must be nonnegative");
  }

  CountTable table;
  table.k_max_ = k_max;
  table.max_edges_ = options.max_edges;
  table.rows_.resize(k_max + 1);

  auto row_length = [&](int k) {
    long len = pairs(k) + 1;
    if (options.max_edges) len = std::min<long>(len, *options.max_edges + 1);
    return len;
  };

  // binomial_rows[t][e] = C(C(t,2), e) for the complement of the vertex-1 component.
  std::vector<std::vector<BigInt>> binomial_rows(k_max + 1);
  for (int t = 0; t <= k_max; ++t) {
    long len = row_length(std::max(t, 1));
    if (t <= 1) len = 1;
    binomial_rows[t].resize(len);
    for (long e = 0; e < len; ++e) binomial_rows[t][e] = binomial(pairs(t), e);
  }

  std::vector<BigInt> acc;
  for (int k = 1; k <= k_max; ++k) {
    const long len = row_length(k);
    auto& row = table.rows_[k];
    row.assign(len, BigInt(0));
    for (long l = 0; l < len; ++l) row[l] = binomial(pairs(k), l);
    for (int s = 1; s < k; ++s) {
      const auto& comp = table.rows_[s];
      const auto& rest = binomial_rows[k - s];
      acc.assign(len, BigInt(0));
      for (long m = s - 1; m < static_cast<long>(comp.size()) && m < len; ++m) {
        if (comp[m] == 0) continue;
        const long e_end = std::min<long>(static_cast<long>(rest.size()), len - m);
        for (long e = 0; e < e_end; ++e) {
          mpz_addmul(acc[m + e].get_mpz_t(), comp[m].get_mpz_t(), rest[e].get_mpz_t());
        }
      }
      const BigInt choose = binomial(k - 1, s - 1);
      for (long l = 0; l < len; ++l) {
        if (acc[l] != 0) mpz_submul(row[l].get_mpz_t(), choose.get_mpz_t(), acc[l].get_mpz_t());
      }
    }
  }
  return table;
}

BigInt cayley_trees(int k) {
  if (k < 1) throw DomainError("cayley_trees: k must be >= 1");
  if (k <= 2) return 1;
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), k, k - 2);
  return out;
}

BigInt renyi_unicyclic(int k) {
  if (k < 3) throw DomainError("renyi_unicyclic: k must be >= 3");
  // (k-1)!/2 * sum_{l<=k-3} k^l/l! = (1/2) sum_l k^l (k-1)!/l!, each summand an integer.
  BigInt sum = 0;
  BigInt falling = 1;  // (k-1)!/l! built from l = k-1 downwards
  BigInt kpow;
  for (int l = k - 1; l >= 0; --l) {
    if (l <= k - 3) {
      mpz_ui_pow_ui(kpow.get_mpz_t(), k, l);
      sum += kpow * falling;
    }
    falling *= std::max(l, 1);
  }
  return sum / 2;
}

WrightEstimate wright_from_counts(int index, const CountTable& table) {
  if (index < 0) throw DomainError("wright_from_counts: index must be >= 0");
  const int excess = index - 1;
  const int k_max = table.k_max();
  // C(k, k+excess) must be nonzero at k_max/2, and six distinct sample sizes are needed.
  int k_min_feasible = 1;
  while (k_min_feasible + excess > pairs(k_min_feasible) ||
         k_min_feasible + excess < k_min_feasible - 1) {
    ++k_min_feasible;
  }
  if (k_max < 12 || k_max / 2 < k_min_feasible + 2) {
    throw DomainError("wright_from_counts: k_max=" + std::to_string(k_max) +
                      " too small for index " + std::to_string(index));
  }
  if (!table.covers(k_max, k_max + excess)) {
    throw DomainError("wright_from_counts: table does not cover the required entries");
  }

  PrecisionScope scope(50);
  auto ratio = [&](int k) {
    Real kk = k;
    Real exponent = Real(k) + Real(3 * excess - 1) / 2;
    return Real(to_real(table.at(k, k + excess)) / pow(kk, exponent));
  };

  WrightEstimate est;
  est.index = index;
  est.k_max = k_max;
  est.at_k_max = static_cast<double>(ratio(k_max));
  est.at_half = static_cast<double>(ratio(k_max / 2));

  // Lagrange interpolation in h = k^{-1/2}, evaluated at h = 0.
  const int points = 6;
  const int span = k_max - k_max / 2;
  std::vector<int> ks;
  for (int i = 0; i < points; ++i) ks.push_back(k_max - (span * i) / (points - 1));
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  std::vector<Real> h, y;
  for (int k : ks) {
    h.push_back(1 / sqrt(Real(k)));
    y.push_back(ratio(k));
  }
  Real value = 0;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    Real basis = 1;
    for (std::size_t j = 0; j < ks.size(); ++j) {
      if (j != i) basis *= (-h[j]) / (h[i] - h[j]);
    }
    value += y[i] * basis;
  }
  est.extrapolated = static_cast<double>(value);
  est.extrapolation_points = static_cast<int>(ks.size());
  return est;
}

}  // namespace mstlab
