#pragma once

// Monte Carlo on the complete graph K_n with i.i.d. edge weights and on the
// random graph G(n, p). Every random quantity is a pure function of
// (seed, replicate, coordinates), so results are bit-reproducible.

#include <cstdint>
#include <string>
#include <vector>

#include "mstlab/precision.hpp"

namespace mstlab {

enum class WeightModel { uniform, exponential };

std::string to_string(WeightModel model);
WeightModel parse_weight_model(const std::string& name);

/// Weight of edge {i, j} in replicate `rep`: U in [0, 1) or -ln(1 - U) built
/// from the same U.
double edge_weight(std::uint64_t seed, std::uint64_t rep, int i, int j, WeightModel model);

struct MstEdge {
  int u = 0;
  int v = 0;  ///< u < v
  double weight = 0;
};

/// Minimum spanning tree of K_n by Prim's method with a nearest-tree-vertex
/// array: O(n^2) time, O(n) memory, each edge weight generated once.
std::vector<MstEdge> prim_mst(int n, std::uint64_t seed, std::uint64_t rep, WeightModel model);

/// Total MST weight of replicate `rep`. Requires n >= 2.
double mst_length(int n, WeightModel model, std::uint64_t seed, std::uint64_t rep = 0);

struct MCEstimate {
  double mean = 0;
  double std_error = 0;  ///< sample standard deviation / sqrt(reps)
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  std::string model;
  int n = 0;
};

/// Mean MST length over replicates 0..reps-1. Requires n >= 2, reps >= 2.
MCEstimate estimate_mean_mst(int n, std::uint64_t reps, WeightModel model, std::uint64_t seed);

/// E_exp(L_n) - E_unif(L_n) from one MST per replicate: with exponential
/// weights -ln(1 - U_e) the tree is the same, so each sample is
/// sum_{e in T} (-ln(1 - U_e) - U_e) >= 0. With `check_edge_sets` every
/// replicate also rebuilds the exponential MST and throws MethodDisagreement
/// if the edge sets differ.
MCEstimate coupled_exp_uniform_diff(int n, std::uint64_t reps, std::uint64_t seed,
                                    bool check_edge_sets = false);

/// One connected component of a sampled graph.
struct ComponentInfo {
  int size = 0;
  long edges = 0;
  long excess() const { return edges - size; }
};

struct GnpSample {
  int n = 0;
  long edges = 0;
  std::vector<ComponentInfo> components;
};

/// Samples G(n, p) for replicate `rep` by geometric skipping over the
/// lexicographic pair sequence and labels components with union-find.
GnpSample sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t rep);

struct StatSummary {
  double mean = 0;
  double std_error = 0;
};

struct CensusRecord {
  int n = 0;
  double lambda = 0;  ///< p = 1/n + lambda n^{-4/3}
  double p = 0;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  StatSummary components;
  StatSummary trees;      ///< excess -1
  StatSummary unicyclic;  ///< excess 0
  StatSummary complex;    ///< excess >= 1
  /// excess_histogram[j] = complex components of excess j summed over all
  /// replicates (index 0 unused).
  std::vector<std::uint64_t> excess_histogram;
};

/// Edge probability at scaled location lambda.
double critical_p(int n, double lambda);

/// Census at p = 1/n + lambda n^{-4/3}. Requires n >= 2, reps >= 2 and p in [0, 1].
CensusRecord gnp_component_census(int n, double lambda, std::uint64_t reps, std::uint64_t seed);

/// Census at an explicit p; lambda is reported as (p - 1/n) n^{4/3}.
CensusRecord gnp_census_at_p(int n, double p, std::uint64_t reps, std::uint64_t seed);

/// E[#components of G(n, p)] by enumerating all 2^{C(n,2)} graphs.
/// Requires 1 <= n <= 5 and 0 <= p <= 1; ResourceError for n > 5.
Rational brute_force_expected_components(int n, const Rational& p);

}  // namespace mstlab
