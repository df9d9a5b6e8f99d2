#pragma once

// Exact expected MST length E(L_n) = int_0^1 E[#components of G(n,p)] dp - 1
// for uniform [0,1] edge weights, split by component class.

#include <iosfwd>
#include <vector>

#include "mstlab/graph_counts.hpp"
#include "mstlab/precision.hpp"

namespace mstlab {

struct ExactExpectation {
  int n = 0;
  Rational total;           ///< E(L_n)
  Rational tree_part;       ///< sum_k A(k, k-1)
  Rational unicyclic_part;  ///< sum_k A(k, k)
  Rational complex_part;    ///< sum_k sum_{j>=1} A(k, k+j)
};

/// Both factors of the integrated component count of size k and excess j.
struct ABTerm {
  int k = 0;
  int j = 0;
  Rational a_value;
  Rational b_value;
};

/// B(k,k+j) = n!/(n-k)! * (k(n-k) + C(k,2) - k - j)! / (k(n-k) + C(k,2) + 1)!.
/// Requires 1 <= k <= n and k-1 <= k+j <= C(k,2).
Rational b_term(int n, int k, int j);

/// A(k,k+j) = int_0^1 E kappa(k,j,p) dp = C(k,k+j) (k+j)!/k! * B(k,k+j).
Rational a_term(int n, int k, int j, const CountTable& table);

ABTerm ab_term(int n, int k, int j, const CountTable& table);

/// sum_{k,j} C(n,k) C(k,k+j) p^{k+j} (1-p)^{k(n-k)+C(k,2)-k-j}, the expected
/// number of components of G(n,p).
Rational expected_component_count(int n, const Rational& p, const CountTable& table);

/// Expected number of vertices summed over all components, sum_k k E kappa(k,.,p).
/// Equals n; kept as a conservation check on the count table.
Rational expected_vertex_mass(int n, const Rational& p, const CountTable& table);

struct ExactOptions {
  int max_n = 30;
};

/// Requires 2 <= n <= options.max_n and a table covering k <= n without an edge cap.
ExactExpectation exact_expected_mst(int n, const CountTable& table,
                                    const ExactOptions& options = {});

/// sum_{k=1}^{n} A(k, k-1) from Cayley counts and log-gamma factorial ratios.
Real tree_part_float(int n, unsigned digits = 40);

/// sum_{k=3}^{n} A(k, k) with Renyi counts; C(k,k)/k^{k+1} is accumulated as
/// (1/2k^2) sum_{d>=2} prod_{i<=d} (1 - i/k), which never overflows.
Real unicyclic_part_float(int n, unsigned digits = 40);

/// 2 C(k,k) / k^{k+1} from the scaled Renyi sum.
Real renyi_scaled_term(int k, unsigned digits = 40);

struct UnicyclicSeries {
  int terms = 0;
  Real partial;  ///< sum_{k=3}^{terms} 2C(k,k)/k^{k+1}
  Real tail;     ///< asymptotic estimate of sum_{k>terms}
  Real total;
};

/// sum_{k>=3} 2C(k,k)/k^{k+1}. The tail uses Stirling's series together with
/// Ramanujan's expansion of the truncated exponential series,
///   2C(k,k)/k^{k+1} = sqrt(pi/2) k^{-3/2} e^{1/(12k) - 1/(360k^3)}
///                     - (7/3 - (131/135)/k - (8/2835)/k^2) / k^2 + O(k^{-11/2}),
/// summed with Hurwitz zeta values.
UnicyclicSeries unicyclic_series(int terms, unsigned digits = 40);

/// CSV header and row: n,total,tree,unicyclic,complex with "p/q" strings and
/// 30-digit decimal renderings.
void write_exact_csv_header(std::ostream& out);
void write_exact_csv_row(std::ostream& out, const ExactExpectation& e);

}  // namespace mstlab
