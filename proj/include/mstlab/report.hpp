#pragma once

// Machine-readable renderings of module results. Exact rationals appear as
// {"fraction": "p/q", "decimal": "..."}; high-precision reals as a double
// plus a 30-digit decimal string.

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "mstlab/constants.hpp"
#include "mstlab/exact_engine.hpp"
#include "mstlab/mc_sim.hpp"

namespace mstlab {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& value);
Json real_json(const Real& value, double error_estimate, const char* method);

Json to_json(const ConstantsReport& report);
Json to_json(const ExactExpectation& e);
Json to_json(const MCEstimate& e);
Json to_json(const CensusRecord& r);

/// "name,value,error_estimate,method" rows.
void write_constants_csv(std::ostream& out, const ConstantsReport& report);

void write_mc_csv_header(std::ostream& out);
void write_mc_csv_row(std::ostream& out, const MCEstimate& e);

/// One row per census with every class mean and standard error; the excess
/// histogram is flattened to "j:count" pairs separated by ';'.
void write_census_csv_header(std::ostream& out);
void write_census_csv_row(std::ostream& out, const CensusRecord& r);

}  // namespace mstlab
