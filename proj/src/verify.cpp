#include "mstlab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "mstlab/errors.hpp"

namespace mstlab {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

// |computed - target| <= tolerance.
CheckResult near(const std::string& name, double computed, double target, double tolerance,
                 const std::string& note = "") {
  return {name, fmt(computed), fmt(target), "+-" + fmt(tolerance, 3),
          std::abs(computed - target) <= tolerance, note};
}

CheckResult at_most(const std::string& name, double computed, double bound,
                    const std::string& note = "") {
  return {name, fmt(computed), "<= " + fmt(bound, 3), "", computed <= bound, note};
}

CheckResult holds(const std::string& name, bool ok, const std::string& computed,
                  const std::string& note = "") {
  return {name, computed, "true", "exact", ok, note};
}

ConstantsReport constants_for_acceptance() {
  ConstantsOptions options;
  options.series_terms = 1000;
  options.tail = true;
  return c2_total(options);
}

void criterion_constants(CriterionResult& out) {
  out.title = "constants c1, c2a, c2b, c2c, c2";
  const auto start = Clock::now();
  const ConstantsReport r = constants_for_acceptance();
  const double elapsed = seconds_since(start);
  out.checks.push_back(near("c1", r.c1.value, 0.0384956, 1e-6));
  out.checks.push_back(near("c2a closed form", static_cast<double>(r.c2a.closed_form), -0.16098, 1e-5));
  out.checks.push_back(at_most("c2a |closed - quadrature|", r.c2a.difference(), 1e-8));
  out.checks.push_back(near("c2b closed form", static_cast<double>(r.c2b.closed_form), -0.83298, 1e-5));
  out.checks.push_back(at_most("c2b |closed - quadrature|", r.c2b.difference(), 1e-8));
  out.checks.push_back(near("c2c partial sum, 1000 terms", static_cast<double>(r.c2c_partial),
                            -0.7331, 5e-4));
  out.checks.push_back(near("c2c with tail model", static_cast<double>(r.c2c), -0.7355, 2e-3,
                            "tail model is not rigorous"));
  out.checks.push_back(near("c2", static_cast<double>(r.c2), -1.7295, 3e-3));
  out.checks.push_back(at_most("runtime [s]", elapsed, 300));
}

void criterion_integral_forms(CriterionResult& out) {
  out.title = "integral forms of c2";
  const ConstantsReport r = constants_for_acceptance();
  const double x = r.direct.x_form.value();
  const double y = r.direct.y_form.value();
  out.checks.push_back(at_most("|x-form - y-form|", std::abs(x - y), 1e-8));
  out.checks.push_back(near("c2a + c2b + c2c vs x-form", static_cast<double>(r.c2), x, 2e-3,
                            "tolerance is the c2c tail-model allowance"));
}

void criterion_exact(CriterionResult& out) {
  out.title = "exact engine";
  auto start = Clock::now();
  const CountTable table = build_count_table(12);
  std::vector<ExactExpectation> rows;
  for (int n = 2; n <= 12; ++n) rows.push_back(exact_expected_mst(n, table));
  out.checks.push_back(holds("E(L_2) = 1/2", rows[0].total == Rational(1, 2),
                             to_fraction_string(rows[0].total)));
  out.checks.push_back(holds("E(L_3) = 3/4", rows[1].total == Rational(3, 4),
                             to_fraction_string(rows[1].total)));
  bool increasing = true;
  for (int n = 3; n <= 8; ++n) increasing = increasing && rows[n - 2].total > rows[n - 3].total;
  out.checks.push_back(holds("E(L_n) strictly increasing, n = 2..8", increasing,
                             increasing ? "true" : "false"));
  bool decomposition = true;
  for (const auto& e : rows) {
    decomposition = decomposition &&
                    e.tree_part + e.unicyclic_part + e.complex_part - 1 == e.total;
  }
  out.checks.push_back(holds("tree + unicyclic + complex - 1 = total, n <= 12", decomposition,
                             decomposition ? "true" : "false"));
  bool conserved = true;
  for (int n = 1; n <= 10; ++n) {
    for (const Rational& p : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
      conserved = conserved && expected_vertex_mass(n, p, table) == n;
    }
  }
  out.checks.push_back(holds("sum_k k E kappa(k, j, p) = n, n <= 10, p in {1/4, 1/2, 3/4}",
                             conserved, conserved ? "true" : "false"));
  out.checks.push_back(at_most("runtime n <= 12 [s]", seconds_since(start), 60));

  start = Clock::now();
  const CountTable big = build_count_table(30);
  ExactExpectation last;
  for (int n = 2; n <= 30; ++n) last = exact_expected_mst(n, big);
  out.checks.push_back(at_most("runtime n <= 30 [s]", seconds_since(start), 600,
                               "E(L_30) = " + to_decimal(last.total, 16)));
}

void criterion_trends(CriterionResult& out) {
  out.title = "tree and unicyclic coefficient trends";
  PrecisionScope scope(50);
  const int n = 10000;
  const Real nn = n;
  const Real z2 = zeta2();
  const Real z3 = zeta3();
  const Real scale = pow(nn, Real(4) / 3);
  const double c2a_value = -0.16098;

  const Real tree = tree_part_float(n, 40);
  const double tree_coefficient = static_cast<double>(scale * (tree - z3 - 3 * (z2 - z3) / (2 * nn)));
  out.checks.push_back(near("n^{4/3}(tree - zeta3 - 3(zeta2 - zeta3)/2n), n = 10^4",
                            tree_coefficient, c2a_value, 0.1 * std::abs(c2a_value),
                            "+-10% relative"));

  const Real i_log = log_integral(1e-12).value;
  const Real leading = z3 - 3 * z2 - i_log;
  const Real unicyclic = unicyclic_part_float(n, 40);
  const double lead = static_cast<double>(leading);
  out.checks.push_back(near("2n * unicyclic part, n = 10^4", static_cast<double>(2 * nn * unicyclic),
                            lead, 0.01 * lead, "+-1% relative"));

  const UnicyclicSeries series = unicyclic_series(10000, 40);
  out.checks.push_back(near("sum_k 2C(k,k)/k^{k+1}, 10^4 terms + tail",
                            static_cast<double>(series.total), lead, 1e-8));
}

void criterion_scaling(CriterionResult& out) {
  out.title = "scaling-limit machinery";
  const WrightTable wright = wright_table(3001);
  const DampedPsi2 psi2(wright);

  double worst = 0;
  double worst_x = 0;
  const int points = 25;
  for (int i = 0; i < points; ++i) {
    const double x = 0.01 * std::pow(2000.0, static_cast<double>(i) / (points - 1));
    const double residual = gaussian_identity_residual(x);
    if (residual > worst) {
      worst = residual;
      worst_x = x;
    }
  }
  out.checks.push_back(at_most("max Gaussian identity residual, x in [0.01, 20]", worst, 1e-8,
                               "worst at x = " + fmt(worst_x, 4)));

  const SeriesEstimate series = c2c(1000, true, wright);
  const QuadResult integral = lambda_integral(psi2, -8, 8);
  out.checks.push_back(near("int_{-8}^{8} (f - 1{lambda > 0}) d lambda", integral.value,
                            static_cast<double>(series.value), 0.02, "target is c2c"));

  // Grid lambda = -8, -7.5, ..., 8; a decrease larger than 1e-6 is a violation.
  double previous = f_of_lambda(-8, psi2).value;
  double largest_drop = 0;
  double drop_at = 0;
  for (int i = 1; i <= 32; ++i) {
    const double lambda = -8 + 0.5 * i;
    const double value = f_of_lambda(lambda, psi2).value;
    if (previous - value > largest_drop) {
      largest_drop = previous - value;
      drop_at = lambda;
    }
    previous = value;
  }
  out.checks.push_back(at_most("largest decrease of f on the grid", largest_drop, 1e-6,
                               largest_drop > 1e-6
                                   ? "f exceeds 1 and decreases toward it, e.g. near lambda = " +
                                         fmt(drop_at, 3)
                                   : ""));
}

void criterion_simulation(CriterionResult& out, const VerifyOptions& options) {
  out.title = "simulation vs exact";
  const auto start = Clock::now();
  const CountTable table = build_count_table(9);
  for (int n = 4; n <= 9; ++n) {
    const MCEstimate mc = estimate_mean_mst(n, options.mst_reps, WeightModel::uniform,
                                            options.seed + static_cast<std::uint64_t>(n));
    const double exact = static_cast<double>(to_real(exact_expected_mst(n, table).total));
    out.checks.push_back(near("E(L_" + std::to_string(n) + ") Monte Carlo vs exact", mc.mean,
                              exact, 3 * mc.std_error,
                              "3 SE, " + std::to_string(mc.reps) + " reps"));
  }
  const Rational half(1, 2);
  for (int n = 2; n <= 5; ++n) {
    const Rational brute = brute_force_expected_components(n, half);
    if (brute != expected_component_count(n, half, table)) {
      throw MethodDisagreement("brute force and exact component counts differ at n = " +
                               std::to_string(n));
    }
    const CensusRecord census =
        gnp_census_at_p(n, 0.5, options.census_reps, options.seed + 100 + static_cast<std::uint64_t>(n));
    out.checks.push_back(near("census mean components, n = " + std::to_string(n) + ", p = 1/2",
                              census.components.mean, static_cast<double>(to_real(brute)),
                              3 * census.components.std_error, "3 SE; target = brute force = exact"));
  }
  const MCEstimate gap = coupled_exp_uniform_diff(100, options.coupled_reps, options.seed + 7);
  const double target = static_cast<double>(zeta3()) / 100;
  out.checks.push_back(near("coupled exponential - uniform gap, n = 100", gap.mean, target,
                            std::max(3 * gap.std_error, 1e-3), "max(3 SE, 1e-3)"));
  out.checks.push_back(at_most("runtime [s]", seconds_since(start), 600));
}

void criterion_substitution(CriterionResult& out, const VerifyOptions& options) {
  out.title = "large-n expansion by direct simulation (substituted by 3-6)";
  // A coarse consistency check only: at n = 200 the n^{-4/3} term is about one
  // standard error, so the expansion cannot be resolved at this scale.
  const int n = 200;
  const MCEstimate mc = estimate_mean_mst(n, 2000, WeightModel::uniform, options.seed + 200);
  const ConstantsReport r = constants_for_acceptance();
  const double nn = n;
  const double c2_term = static_cast<double>(r.c2) / std::pow(nn, 4.0 / 3.0);
  const double predicted = static_cast<double>(r.zeta3) + r.c1.value / nn + c2_term;
  out.checks.push_back(near("E(L_200) vs zeta3 + c1/n + c2/n^{4/3}", mc.mean, predicted,
                            3 * mc.std_error,
                            "c2 term " + fmt(c2_term, 3) + " vs SE " + fmt(mc.std_error, 3)));
}

}  // namespace

CriterionResult run_criterion(int id, const VerifyOptions& options) {
  CriterionResult out;
  out.id = id;
  const auto start = Clock::now();
  try {
    switch (id) {
      case 1: criterion_constants(out); break;
      case 2: criterion_integral_forms(out); break;
      case 3: criterion_exact(out); break;
      case 4: criterion_trends(out); break;
      case 5: criterion_scaling(out); break;
      case 6: criterion_simulation(out, options); break;
      case 7: criterion_substitution(out, options); break;
      default: throw DomainError("unknown acceptance criterion " + std::to_string(id));
    }
    out.pass = std::all_of(out.checks.begin(), out.checks.end(),
                           [](const CheckResult& c) { return c.pass; });
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& e) {
    out.error = e.what();
    out.pass = false;
  }
  out.seconds = seconds_since(start);
  return out;
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<int> ids = options.only;
  if (ids.empty()) ids = {1, 2, 3, 4, 5, 6, 7};
  std::vector<CriterionResult> out;
  for (int id : ids) out.push_back(run_criterion(id, options));
  return out;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CriterionResult& r) { return r.pass; });
}

void print_acceptance_table(std::ostream& out, const std::vector<CriterionResult>& results) {
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      out << "  [" << r.id << "] " << (c.pass ? "PASS" : "FAIL") << "  " << c.name
          << ": computed " << c.computed << ", target " << c.target;
      if (!c.tolerance.empty()) out << ' ' << c.tolerance;
      if (!c.note.empty()) out << "  (" << c.note << ')';
      out << '\n';
    }
    if (!r.error.empty()) out << "  [" << r.id << "] ERROR " << r.error << '\n';
  }
  for (const auto& r : results) {
    out << "criterion " << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << "  " << r.title << "  ("
        << fmt(r.seconds, 3) << " s)\n";
  }
}

Json to_json(const std::vector<CriterionResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      checks.push_back({{"name", c.name},
                        {"computed", c.computed},
                        {"target", c.target},
                        {"tolerance", c.tolerance},
                        {"pass", c.pass},
                        {"note", c.note}});
    }
    Json entry{{"criterion", r.id}, {"title", r.title}, {"pass", r.pass},
               {"seconds", r.seconds}, {"checks", checks}};
    if (!r.error.empty()) entry["error"] = r.error;
    out.push_back(entry);
  }
  return out;
}

}  // namespace mstlab
