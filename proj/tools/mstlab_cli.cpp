// mstlab: command-line front end.
//
// Exit status: 0 success, 1 usage or validation error, 2 computation error,
// 3 acceptance failure.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "mstlab/constants.hpp"
#include "mstlab/errors.hpp"
#include "mstlab/exact_engine.hpp"
#include "mstlab/graph_counts.hpp"
#include "mstlab/mc_sim.hpp"
#include "mstlab/report.hpp"
#include "mstlab/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kComputation = 2, kAcceptance = 3 };

struct LambdaRange {
  double start = 0, stop = 0, step = 1;
};

LambdaRange parse_range(const std::string& text) {
  LambdaRange r;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  if (!(in >> r.start >> c1 >> r.stop >> c2 >> r.step) || c1 != ':' || c2 != ':' ||
      !(in >> std::ws).eof()) {
    throw mstlab::DomainError("--lambda expects start:stop:step, got '" + text + "'");
  }
  if (!(r.step > 0) || r.stop < r.start) {
    throw mstlab::DomainError("--lambda needs step > 0 and start <= stop");
  }
  return r;
}

// Writes to --output when given, else stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw mstlab::DomainError("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expected MST length of the complete graph: exact values, constants, simulation"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output;
  std::uint64_t seed = 20231015;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sub->add_option("--output,-o", output, "Output file (default: stdout)");
  };

  // constants
  mstlab::ConstantsOptions copts;
  bool no_tail = false;
  auto* constants = app.add_subcommand("constants", "c1, c2a, c2b, c2c and c2");
  constants->add_option("--series-terms,-K", copts.series_terms, "Terms of the c2c series")
      ->check(CLI::Range(100, 20000))
      ->capture_default_str();
  constants->add_flag("--no-tail", no_tail, "Omit the c2c tail model");
  constants->add_option("--digits", copts.digits, "Working decimal digits")
      ->check(CLI::Range(30u, 400u))
      ->capture_default_str();
  constants->add_option("--tolerance", copts.tolerance, "Absolute quadrature tolerance")
      ->check(CLI::Range(1e-14, 1e-3))
      ->capture_default_str();
  constants->add_option("--cutoff", copts.cutoff, "Truncation point of the direct integrals")
      ->check(CLI::Range(10.0, 30.0))
      ->capture_default_str();
  constants->add_flag("--lambda-integral", copts.lambda_integral,
                      "Also integrate f(lambda) - 1{lambda > 0} over [-8, 8]");
  add_common(constants);

  // exact
  int n_min = 2, n_max = 12, n_bound = 30;
  auto* exact = app.add_subcommand("exact", "Exact rational E(L_n) split by component class");
  exact->add_option("--n-min", n_min, "Smallest n")->check(CLI::Range(2, 200))->capture_default_str();
  exact->add_option("--n-max", n_max, "Largest n")->check(CLI::Range(2, 200))->capture_default_str();
  exact->add_option("--bound", n_bound, "Configured upper bound on n")
      ->check(CLI::Range(2, 200))
      ->capture_default_str();
  add_common(exact);

  // mc
  std::vector<int> mc_n{10};
  std::uint64_t reps = 10000;
  std::string model = "uniform";
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimates of E(L_n)");
  mc->add_option("--n", mc_n, "Vertex counts")->check(CLI::Range(2, 100000))->capture_default_str();
  mc->add_option("--reps", reps, "Replicates")->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40))
      ->capture_default_str();
  mc->add_option("--model", model, "Weight model, or the coupled gap estimator")
      ->check(CLI::IsMember({"uniform", "exponential", "coupled"}))
      ->capture_default_str();
  mc->add_option("--seed", seed, "Seed")->capture_default_str();
  add_common(mc);

  // census
  int census_n = 1000;
  std::string lambda_text = "-2:2:1";
  std::vector<double> p_values;
  std::uint64_t census_reps = 1000;
  auto* census = app.add_subcommand("census", "G(n,p) component census across the critical window");
  census->add_option("--n", census_n, "Vertex count")->check(CLI::Range(2, 10000000))->capture_default_str();
  census->add_option("--lambda", lambda_text, "Grid start:stop:step for p = 1/n + lambda n^{-4/3}")
      ->capture_default_str();
  census->add_option("--p", p_values, "Explicit edge probabilities (replace --lambda)")
      ->check(CLI::Range(0.0, 1.0));
  census->add_option("--reps", census_reps, "Replicates")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40))
      ->capture_default_str();
  census->add_option("--seed", seed, "Seed")->capture_default_str();
  add_common(census);

  // verify
  mstlab::VerifyOptions vopts;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--criteria", vopts.only, "Subset of criteria 1-7")->check(CLI::Range(1, 7));
  verify->add_option("--mst-reps", vopts.mst_reps, "Replicates per n for criterion 6")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40))
      ->capture_default_str();
  verify->add_option("--census-reps", vopts.census_reps, "Replicates per census in criterion 6")
      ->check(CLI::Range(std::uint64_t{2}, std::uint64_t{1} << 40))
      ->capture_default_str();
  verify->add_option("--seed", vopts.seed, "Seed")->capture_default_str();
  verify->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember({"table", "json"}))
      ->capture_default_str();
  verify->add_option("--output,-o", output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (exact->parsed() && n_min > n_max) {
      throw mstlab::DomainError("--n-min must not exceed --n-max");
    }
    LambdaRange range;
    if (census->parsed() && p_values.empty()) range = parse_range(lambda_text);
    Sink sink(output);
    std::ostream& out = sink.stream();
    out.precision(17);

    if (constants->parsed()) {
      copts.tail = !no_tail;
      const mstlab::ConstantsReport report = mstlab::c2_total(copts);
      if (format == "json") {
        out << mstlab::to_json(report).dump(2) << '\n';
      } else {
        mstlab::write_constants_csv(out, report);
      }
    } else if (exact->parsed()) {
      if (n_max > n_bound) {
        throw mstlab::ResourceError("--n-max " + std::to_string(n_max) + " exceeds --bound " +
                                    std::to_string(n_bound));
      }
      const mstlab::CountTable table = mstlab::build_count_table(n_max);
      mstlab::ExactOptions eopts;
      eopts.max_n = n_bound;
      mstlab::Json rows = mstlab::Json::array();
      if (format == "csv") mstlab::write_exact_csv_header(out);
      for (int n = n_min; n <= n_max; ++n) {
        const auto e = mstlab::exact_expected_mst(n, table, eopts);
        if (format == "csv") {
          mstlab::write_exact_csv_row(out, e);
        } else {
          rows.push_back(mstlab::to_json(e));
        }
      }
      if (format == "json") out << rows.dump(2) << '\n';
    } else if (mc->parsed()) {
      mstlab::Json rows = mstlab::Json::array();
      if (format == "csv") mstlab::write_mc_csv_header(out);
      for (int n : mc_n) {
        const mstlab::MCEstimate e =
            model == "coupled"
                ? mstlab::coupled_exp_uniform_diff(n, reps, seed)
                : mstlab::estimate_mean_mst(n, reps, mstlab::parse_weight_model(model), seed);
        if (format == "csv") {
          mstlab::write_mc_csv_row(out, e);
        } else {
          rows.push_back(mstlab::to_json(e));
        }
      }
      if (format == "json") out << rows.dump(2) << '\n';
    } else if (census->parsed()) {
      std::vector<mstlab::CensusRecord> records;
      if (!p_values.empty()) {
        for (double p : p_values) {
          records.push_back(mstlab::gnp_census_at_p(census_n, p, census_reps, seed));
        }
      } else {
        const int steps = static_cast<int>((range.stop - range.start) / range.step + 1e-9);
        for (int i = 0; i <= steps; ++i) {
          const double lambda = range.start + i * range.step;
          records.push_back(mstlab::gnp_component_census(census_n, lambda, census_reps, seed));
        }
      }
      if (format == "csv") {
        mstlab::write_census_csv_header(out);
        for (const auto& r : records) mstlab::write_census_csv_row(out, r);
      } else {
        mstlab::Json rows = mstlab::Json::array();
        for (const auto& r : records) rows.push_back(mstlab::to_json(r));
        out << rows.dump(2) << '\n';
      }
    } else if (verify->parsed()) {
      const auto results = mstlab::run_acceptance(vopts);
      if (verify_format == "json") {
        out << mstlab::to_json(results).dump(2) << '\n';
      } else {
        mstlab::print_acceptance_table(out, results);
      }
      if (!mstlab::all_passed(results)) {
        std::cerr << "mstlab: acceptance failures\n";
        return kAcceptance;
      }
    }
  } catch (const mstlab::DomainError& e) {
    std::cerr << "mstlab: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "mstlab: " << e.what() << '\n';
    return kComputation;
  }
  return kOk;
}
