#include "mstlab/mc_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include "mstlab/errors.hpp"
#include "mstlab/rng.hpp"

namespace mstlab {
namespace {

// Welford accumulation in replicate order.
class Running {
 public:
  void add(double x) {
    ++count_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(count_);
    m2_ += delta * (x - mean_);
  }
  StatSummary summary() const {
    StatSummary out;
    out.mean = mean_;
    if (count_ > 1) {
      const double variance = m2_ / static_cast<double>(count_ - 1);
      out.std_error = std::sqrt(variance / static_cast<double>(count_));
    }
    return out;
  }

 private:
  std::uint64_t count_ = 0;
  double mean_ = 0;
  double m2_ = 0;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), edges_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void add_edge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      ++edges_[a];
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    edges_[a] += edges_[b] + 1;
  }
  std::vector<ComponentInfo> components() {
    std::vector<ComponentInfo> out;
    for (int v = 0; v < static_cast<int>(parent_.size()); ++v) {
      if (find(v) == v) out.push_back({size_[v], edges_[v]});
    }
    return out;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<long> edges_;
};

void check_reps(std::uint64_t reps) {
  if (reps < 2) throw DomainError("Monte Carlo: reps must be >= 2");
}

MCEstimate make_estimate(const Running& acc, int n, std::uint64_t reps, std::uint64_t seed,
                         const std::string& model) {
  const StatSummary s = acc.summary();
  MCEstimate out;
  out.mean = s.mean;
  out.std_error = s.std_error;
  out.reps = reps;
  out.seed = seed;
  out.model = model;
  out.n = n;
  return out;
}

std::vector<std::pair<int, int>> edge_set(const std::vector<MstEdge>& tree) {
  std::vector<std::pair<int, int>> out;
  out.reserve(tree.size());
  for (const auto& e : tree) out.emplace_back(e.u, e.v);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string to_string(WeightModel model) {
  return model == WeightModel::uniform ? "uniform" : "exponential";
}

WeightModel parse_weight_model(const std::string& name) {
  if (name == "uniform") return WeightModel::uniform;
  if (name == "exponential") return WeightModel::exponential;
  throw DomainError("unknown weight model '" + name + "'");
}

double edge_weight(std::uint64_t seed, std::uint64_t rep, int i, int j, WeightModel model) {
  const double u = CounterRng(seed).edge_uniform(static_cast<std::uint32_t>(i),
                                                 static_cast<std::uint32_t>(j), rep);
  return model == WeightModel::uniform ? u : -std::log1p(-u);
}

std::vector<MstEdge> prim_mst(int n, std::uint64_t seed, std::uint64_t rep, WeightModel model) {
  if (n < 2) throw DomainError("prim_mst: n must be >= 2");
  const CounterRng rng(seed);
  auto weight = [&](int i, int j) {
    const double u = rng.edge_uniform(static_cast<std::uint32_t>(i),
                                      static_cast<std::uint32_t>(j), rep);
    return model == WeightModel::uniform ? u : -std::log1p(-u);
  };
  // Vertices outside the tree occupy outside[0..remaining); best[v] is the
  // lightest edge from v into the tree and link[v] its tree endpoint.
  std::vector<int> outside(n - 1);
  std::iota(outside.begin(), outside.end(), 1);
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<int> link(n, 0);
  std::vector<MstEdge> tree;
  tree.reserve(n - 1);
  int added = 0;
  std::size_t remaining = outside.size();
  while (remaining > 0) {
    std::size_t arg = 0;
    double min_weight = std::numeric_limits<double>::infinity();
    for (std::size_t idx = 0; idx < remaining; ++idx) {
      const int v = outside[idx];
      const double w = weight(added, v);
      if (w < best[v]) {
        best[v] = w;
        link[v] = added;
      }
      if (best[v] < min_weight) {
        min_weight = best[v];
        arg = idx;
      }
    }
    const int next = outside[arg];
    tree.push_back({std::min(next, link[next]), std::max(next, link[next]), best[next]});
    outside[arg] = outside[--remaining];
    added = next;
  }
  return tree;
}

double mst_length(int n, WeightModel model, std::uint64_t seed, std::uint64_t rep) {
  double total = 0;
  for (const auto& e : prim_mst(n, seed, rep, model)) total += e.weight;
  return total;
}

MCEstimate estimate_mean_mst(int n, std::uint64_t reps, WeightModel model, std::uint64_t seed) {
  if (n < 2) throw DomainError("estimate_mean_mst: n must be >= 2");
  check_reps(reps);
  Running acc;
  for (std::uint64_t r = 0; r < reps; ++r) acc.add(mst_length(n, model, seed, r));
  return make_estimate(acc, n, reps, seed, to_string(model));
}

MCEstimate coupled_exp_uniform_diff(int n, std::uint64_t reps, std::uint64_t seed,
                                    bool check_edge_sets) {
  if (n < 2) throw DomainError("coupled_exp_uniform_diff: n must be >= 2");
  check_reps(reps);
  Running acc;
  for (std::uint64_t r = 0; r < reps; ++r) {
    const auto tree = prim_mst(n, seed, r, WeightModel::uniform);
    double gap = 0;
    for (const auto& e : tree) gap += -std::log1p(-e.weight) - e.weight;
    if (check_edge_sets &&
        edge_set(tree) != edge_set(prim_mst(n, seed, r, WeightModel::exponential))) {
      throw MethodDisagreement("coupled_exp_uniform_diff: MST edge sets differ in replicate " +
                               std::to_string(r));
    }
    acc.add(gap);
  }
  return make_estimate(acc, n, reps, seed, "exponential-uniform");
}

GnpSample sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t rep) {
  if (n < 1) throw DomainError("sample_gnp: n must be >= 1");
  if (!(p >= 0 && p <= 1)) throw DomainError("sample_gnp: p must lie in [0, 1]");
  GnpSample out;
  out.n = n;
  UnionFind uf(n);
  if (p > 0) {
    CounterStream stream(seed, rep);
    const double log_q = std::log1p(-p);  // -inf at p = 1: every skip is zero
    // Pairs (v, w) with w < v in lexicographic order; jump ahead by a
    // geometric number of non-edges each step.
    long v = 1;
    long w = -1;
    while (v < n) {
      const double r = stream.uniform();
      const double skip = p < 1 ? std::floor(std::log1p(-r) / log_q) : 0.0;
      if (skip > static_cast<double>(n) * n) break;
      w += 1 + static_cast<long>(skip);
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) {
        uf.add_edge(static_cast<int>(v), static_cast<int>(w));
        ++out.edges;
      }
    }
  }
  out.components = uf.components();
  return out;
}

double critical_p(int n, double lambda) {
  if (n < 1) throw DomainError("critical_p: n must be >= 1");
  return 1.0 / n + lambda * std::pow(static_cast<double>(n), -4.0 / 3.0);
}

CensusRecord gnp_census_at_p(int n, double p, std::uint64_t reps, std::uint64_t seed) {
  if (n < 2) throw DomainError("gnp_component_census: n must be >= 2");
  if (!(p >= 0 && p <= 1)) throw DomainError("gnp_component_census: p must lie in [0, 1]");
  check_reps(reps);
  CensusRecord out;
  out.n = n;
  out.p = p;
  out.lambda = (p - 1.0 / n) * std::pow(static_cast<double>(n), 4.0 / 3.0);
  out.reps = reps;
  out.seed = seed;
  out.excess_histogram.assign(2, 0);
  Running components, trees, unicyclic, complex;
  for (std::uint64_t r = 0; r < reps; ++r) {
    const GnpSample sample = sample_gnp(n, p, seed, r);
    long tree_count = 0, unicyclic_count = 0, complex_count = 0;
    for (const auto& c : sample.components) {
      const long j = c.excess();
      if (j == -1) {
        ++tree_count;
      } else if (j == 0) {
        ++unicyclic_count;
      } else {
        ++complex_count;
        if (static_cast<std::size_t>(j) >= out.excess_histogram.size()) {
          out.excess_histogram.resize(j + 1, 0);
        }
        ++out.excess_histogram[j];
      }
    }
    components.add(static_cast<double>(sample.components.size()));
    trees.add(static_cast<double>(tree_count));
    unicyclic.add(static_cast<double>(unicyclic_count));
    complex.add(static_cast<double>(complex_count));
  }
  out.components = components.summary();
  out.trees = trees.summary();
  out.unicyclic = unicyclic.summary();
  out.complex = complex.summary();
  return out;
}

CensusRecord gnp_component_census(int n, double lambda, std::uint64_t reps, std::uint64_t seed) {
  const double p = critical_p(n, lambda);
  if (!(p >= 0 && p <= 1)) {
    throw DomainError("gnp_component_census: p = 1/n + lambda n^{-4/3} lies outside [0, 1]");
  }
  CensusRecord out = gnp_census_at_p(n, p, reps, seed);
  out.lambda = lambda;
  return out;
}

Rational brute_force_expected_components(int n, const Rational& p) {
  if (n < 1) throw DomainError("brute_force_expected_components: n must be >= 1");
  if (n > 5) throw ResourceError("brute_force_expected_components: n must be <= 5");
  if (p < 0 || p > 1) throw DomainError("brute_force_expected_components: p must lie in [0, 1]");
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }
  const int m = static_cast<int>(pairs.size());
  const Rational q = 1 - p;
  std::vector<Rational> p_pow(m + 1, Rational(1)), q_pow(m + 1, Rational(1));
  for (int e = 1; e <= m; ++e) {
    p_pow[e] = p_pow[e - 1] * p;
    q_pow[e] = q_pow[e - 1] * q;
  }
  Rational total = 0;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    UnionFind uf(n);
    int edges = 0;
    for (int e = 0; e < m; ++e) {
      if (mask & (1u << e)) {
        uf.add_edge(pairs[e].first, pairs[e].second);
        ++edges;
      }
    }
    total += static_cast<long>(uf.components().size()) * p_pow[edges] * q_pow[m - edges];
  }
  return total;
}

}  // namespace mstlab
