#pragma once

// The acceptance suite: criteria 1-7, each a list of checks comparing a
// computed value against a target with a fixed tolerance.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mstlab/report.hpp"

namespace mstlab {

struct CheckResult {
  std::string name;
  std::string computed;
  std::string target;
  std::string tolerance;
  bool pass = false;
  std::string note;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  std::vector<CheckResult> checks;
  std::string error;  ///< set when a computation threw
};

struct VerifyOptions {
  std::uint64_t seed = 20231015;
  std::uint64_t mst_reps = 1000000;  ///< criterion 6, per n
  std::uint64_t census_reps = 1000000;
  std::uint64_t coupled_reps = 10000;
  std::vector<int> only;  ///< empty: every criterion
};

/// Runs one criterion; exceptions are caught and reported as a failure.
CriterionResult run_criterion(int id, const VerifyOptions& options = {});

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

/// Check rows followed by one "criterion N ... PASS|FAIL" line per criterion.
void print_acceptance_table(std::ostream& out, const std::vector<CriterionResult>& results);

Json to_json(const std::vector<CriterionResult>& results);

}  // namespace mstlab
