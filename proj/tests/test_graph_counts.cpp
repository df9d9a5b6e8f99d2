#include <doctest.h>

#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "mstlab/errors.hpp"
#include "mstlab/excursion.hpp"
#include "mstlab/graph_counts.hpp"

using namespace mstlab;

namespace {

// counts[l] = connected labeled graphs on k vertices with l edges, by enumeration.
std::vector<long> brute_force_connected(int k) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  }
  const int m = static_cast<int>(pairs.size());
  std::vector<long> counts(m + 1, 0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x];
      return x;
    };
    int components = k;
    for (int e = 0; e < m; ++e) {
      if (!(mask & (1u << e))) continue;
      const int a = find(pairs[e].first), b = find(pairs[e].second);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
    if (components == 1) ++counts[__builtin_popcount(mask)];
  }
  return counts;
}

// Exponential formula: sum_k C_k(y) x^k/k! = log(sum_k (1+y)^{C(k,2)} x^k/k!),
// with the logarithm of the power series taken coefficientwise in x. Returns
// rows[k][l] for k <= k_max.
std::vector<std::vector<Rational>> exponential_formula(int k_max) {
  using Poly = std::vector<Rational>;  // in y
  auto mul = [](const Poly& a, const Poly& b) {
    Poly c(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return c;
  };
  auto add_scaled = [](Poly& a, const Poly& b, const Rational& s) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
  };
  // g[k] = (1+y)^{C(k,2)} / k!
  std::vector<Poly> g(k_max + 1);
  BigInt fact = 1;
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) fact *= k;
    const int e = k * (k - 1) / 2;
    Poly p(e + 1);
    BigInt binom = 1;
    for (int l = 0; l <= e; ++l) {
      p[l] = Rational(binom, fact);
      p[l].canonicalize();
      binom = binom * (e - l) / (l + 1);
    }
    g[k] = p;
  }
  // c = log g with g_0 = 1: k c_k = k g_k - sum_{i=1}^{k-1} i c_i g_{k-i}.
  std::vector<Poly> c(k_max + 1);
  for (int k = 1; k <= k_max; ++k) {
    Poly acc = g[k];
    for (auto& v : acc) v *= k;
    for (int i = 1; i < k; ++i) add_scaled(acc, mul(c[i], g[k - i]), Rational(-i));
    for (auto& v : acc) v /= k;
    c[k] = acc;
  }
  std::vector<std::vector<Rational>> rows(k_max + 1);
  fact = 1;
  for (int k = 1; k <= k_max; ++k) {
    fact *= k;
    for (auto& v : c[k]) rows[k].push_back(v * fact);
  }
  return rows;
}

}  // namespace

TEST_SUITE("graph_counts") {
  TEST_CASE("spot values") {
    const CountTable t = build_count_table(8);
    CHECK(t.at(1, 0) == 1);
    CHECK(t.at(3, 3) == 1);
    CHECK(t.at(4, 4) == 15);
    CHECK(t.row_sum(5) == 728);
    CHECK(t(2, 0) == 0);
    CHECK(t(4, 7) == 0);
  }

  TEST_CASE("agrees with enumeration for k <= 5") {
    const CountTable t = build_count_table(5);
    const long sums[] = {1, 1, 4, 38, 728};
    for (int k = 1; k <= 5; ++k) {
      const auto brute = brute_force_connected(k);
      for (int l = 0; l < static_cast<int>(brute.size()); ++l) CHECK(t.at(k, l) == brute[l]);
      CHECK(t.row_sum(k) == sums[k - 1]);
    }
  }

  TEST_CASE("agrees with the exponential formula for k <= 10") {
    const CountTable t = build_count_table(10);
    const auto rows = exponential_formula(10);
    for (int k = 1; k <= 10; ++k) {
      for (int l = 0; l < static_cast<int>(rows[k].size()); ++l) {
        REQUIRE(rows[k][l].get_den() == 1);
        CHECK(t.at(k, l) == rows[k][l].get_num());
      }
    }
  }

  TEST_CASE("structural invariants") {
    const int k_max = 14;
    const CountTable t = build_count_table(k_max);
    for (int k = 1; k <= k_max; ++k) {
      const int top = k * (k - 1) / 2;
      CHECK(t.at(k, k - 1) == cayley_trees(k));
      CHECK(t.at(k, top) == 1);
      if (k >= 2) CHECK(t.at(k, k - 2) == 0);
      if (k >= 3) CHECK(t.at(k, k) == renyi_unicyclic(k));
      for (int l = 0; l <= top; ++l) CHECK(t.at(k, l) >= 0);
    }
  }

  TEST_CASE("closed forms") {
    CHECK(cayley_trees(1) == 1);
    CHECK(cayley_trees(4) == 16);
    CHECK(cayley_trees(7) == 16807);
    CHECK(renyi_unicyclic(3) == 1);
    CHECK(renyi_unicyclic(4) == 15);
    CHECK(renyi_unicyclic(8) == build_count_table(8).at(8, 8));
    CHECK_THROWS_AS(renyi_unicyclic(2), DomainError);
    CHECK_THROWS_AS(cayley_trees(0), DomainError);
  }

  TEST_CASE("edge cap keeps stored entries exact") {
    CountTableOptions opts;
    opts.max_edges = 25;
    const CountTable capped = build_count_table(16, opts);
    const CountTable full = build_count_table(16);
    for (int k = 1; k <= 16; ++k) {
      for (int l = 0; l <= std::min(25, k * (k - 1) / 2); ++l) CHECK(capped.at(k, l) == full.at(k, l));
    }
    CHECK_FALSE(capped.covers(16, 26));
    CHECK_THROWS_AS(capped.at(16, 26), DomainError);
    CHECK_THROWS_AS(capped.row_sum(16), DomainError);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(build_count_table(0), DomainError);
    CHECK_THROWS_AS(build_count_table(61), ResourceError);
    const CountTable t = build_count_table(4);
    CHECK_THROWS_AS(t.at(5, 4), DomainError);
    CHECK_THROWS_AS(t.at(0, 0), DomainError);
  }

  TEST_CASE("csv export") {
    std::ostringstream os;
    build_count_table(3).write_csv(os);
    CHECK(os.str().find("3,2,3\n") != std::string::npos);
    CHECK(os.str().find("3,3,1\n") != std::string::npos);
  }

  TEST_CASE("Wright constants from counts at k_max = 60") {
    CountTableOptions opts;
    opts.max_edges = 63;
    const CountTable t = build_count_table(60, opts);
    const WrightTable w = wright_table(5);
    const WrightEstimate e0 = wright_from_counts(0, t);
    CHECK(e0.at_k_max == doctest::Approx(1.0).epsilon(0.02));
    CHECK(e0.extrapolated == doctest::Approx(1.0).epsilon(0.02));
    for (int l = 1; l <= 3; ++l) {
      const WrightEstimate e = wright_from_counts(l, t);
      const double target = static_cast<double>(w[l]);
      CHECK(e.extrapolated == doctest::Approx(target).epsilon(0.03));
      // The raw ratios approach from below as k grows.
      CHECK(e.at_half < e.at_k_max);
      CHECK(e.at_k_max < target);
    }
    CHECK(wright_from_counts(1, t).extrapolated == doctest::Approx(std::sqrt(M_PI / 8)).epsilon(0.02));
    CHECK_THROWS_AS(wright_from_counts(1, build_count_table(10)), DomainError);
    CHECK_THROWS_AS(wright_from_counts(-1, t), DomainError);
  }
}
