#pragma once

// Exact counts C(k, l) of connected labeled graphs on k vertices with l edges.

#include <iosfwd>
#include <optional>
#include <vector>

#include "mstlab/precision.hpp"

namespace mstlab {

struct CountTableOptions {
  /// Largest k_max accepted before a ResourceError is raised.
  int vertex_budget = 60;
  /// When set, only entries with l <= max_edges are built. The recursion for
  /// C(k, l) only reads C(s, m) with m <= l, so the capped table is exact on
  /// everything it stores.
  std::optional<int> max_edges;
};

/// Immutable after construction; safe to share between concurrent readers.
class CountTable {
 public:
  int k_max() const noexcept { return k_max_; }
  std::optional<int> max_edges() const noexcept { return max_edges_; }

  /// True when C(k, edges) is stored (or is structurally zero).
  bool covers(int k, int edges) const noexcept;

  /// C(k, edges); zero outside k-1 <= edges <= k(k-1)/2.
  /// Throws DomainError when k is out of range or the entry was not built.
  const BigInt& at(int k, int edges) const;
  const BigInt& operator()(int k, int edges) const { return at(k, edges); }

  /// Number of connected labeled graphs on k vertices. Requires an uncapped row.
  BigInt row_sum(int k) const;

  /// CSV rows "k,l,C" for every nonzero stored entry.
  void write_csv(std::ostream& out) const;

 private:
  friend CountTable build_count_table(int k_max, const CountTableOptions& options);

  int k_max_ = 0;
  std::optional<int> max_edges_;
  std::vector<std::vector<BigInt>> rows_;  // rows_[k][l], l <= min(C(k,2), cap)
};

/// Builds C(k, l) for 1 <= k <= k_max by inclusion-exclusion on the component
/// containing vertex 1:
///   C(k,l) = C(C(k,2), l) - sum_{s<k} C(k-1, s-1) sum_m C(s,m) C(C(k-s,2), l-m).
CountTable build_count_table(int k_max, const CountTableOptions& options = {});

/// k^{k-2} (1 for k = 1).
BigInt cayley_trees(int k);

/// ((k-1)!/2) sum_{l=0}^{k-3} k^l / l!, the number of connected unicyclic graphs.
BigInt renyi_unicyclic(int k);

/// Empirical Wright constant w_index from C(k, k + index - 1) / k^{k + 3(index-1)/2 - 1/2}.
struct WrightEstimate {
  int index = 0;
  int k_max = 0;
  double at_k_max = 0;      ///< raw ratio at k = k_max
  double at_half = 0;       ///< raw ratio at k = k_max / 2
  double extrapolated = 0;  ///< polynomial extrapolation in k^{-1/2} to k -> infinity
  int extrapolation_points = 0;
};

/// The raw ratio converges like 1 + O(k^{-1/2}); the extrapolated value fits
/// a polynomial in h = k^{-1/2} through six ratios with k in [k_max/2, k_max]
/// and evaluates it at h = 0.
WrightEstimate wright_from_counts(int index, const CountTable& table);

}  // namespace mstlab
