#include <doctest.h>

#include <sstream>

#include "mstlab/report.hpp"
#include "mstlab/verify.hpp"

using namespace mstlab;

TEST_SUITE("report") {
  TEST_CASE("rationals carry fraction and decimal") {
    const Json j = rational_json(Rational(31, 35));
    CHECK(j["fraction"] == "31/35");
    CHECK(j["decimal"].get<std::string>().rfind("0.885714285714", 0) == 0);
  }

  TEST_CASE("exact rows") {
    const Json j = to_json(exact_expected_mst(3, build_count_table(3)));
    CHECK(j["n"] == 3);
    CHECK(j["total"]["fraction"] == "3/4");
    CHECK(j.contains("tree"));
    CHECK(j.contains("complex"));
  }

  TEST_CASE("Monte Carlo rows") {
    const MCEstimate e = estimate_mean_mst(4, 100, WeightModel::uniform, 3);
    const Json j = to_json(e);
    CHECK(j["mean"] == e.mean);
    CHECK(j["seed"] == 3);
    std::ostringstream os;
    write_mc_csv_header(os);
    write_mc_csv_row(os, e);
    CHECK(os.str().find("4,uniform,100,3,") != std::string::npos);
  }

  TEST_CASE("census rows") {
    const CensusRecord r = gnp_component_census(200, 2.0, 20, 1);
    const Json j = to_json(r);
    CHECK(j["reps"] == 20);
    CHECK(j["complex"]["mean"] == r.complex.mean);
    std::ostringstream os;
    write_census_csv_header(os);
    write_census_csv_row(os, r);
    CHECK(os.str().find("\n200,2,") != std::string::npos);
  }

  TEST_CASE("constants report") {
    const ConstantsReport r = c2_total();
    const Json j = to_json(r);
    for (const char* key : {"zeta3", "I_log", "c1", "c2a", "c2b", "c2c_partial", "c2c", "c2"}) {
      REQUIRE(j.contains(key));
      CHECK(j[key].contains("method"));
      CHECK(j[key].contains("error_estimate"));
    }
    CHECK(j["c2c"]["method"].get<std::string>().find("non-rigorous") != std::string::npos);
    std::ostringstream os;
    write_constants_csv(os, r);
    CHECK(os.str().find("\nc1,0.03849564") != std::string::npos);
  }

  TEST_CASE("acceptance table format") {
    VerifyOptions opts;
    opts.only = {3};
    const auto results = run_acceptance(opts);
    REQUIRE(results.size() == 1);
    CHECK(results[0].pass);
    std::ostringstream os;
    print_acceptance_table(os, results);
    CHECK(os.str().find("criterion 3 PASS") != std::string::npos);
    CHECK(to_json(results)[0]["criterion"] == 3);
    CHECK_THROWS(run_criterion(8));
  }
}
