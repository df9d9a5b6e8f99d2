#include "mstlab/report.hpp"

#include <ostream>

namespace mstlab {
namespace {

std::string histogram_string(const std::vector<std::uint64_t>& histogram) {
  std::string out;
  for (std::size_t j = 1; j < histogram.size(); ++j) {
    if (histogram[j] == 0) continue;
    if (!out.empty()) out += ';';
    out += std::to_string(j) + ':' + std::to_string(histogram[j]);
  }
  return out;
}

Json stat_json(const StatSummary& s) { return Json{{"mean", s.mean}, {"std_error", s.std_error}}; }

Json quad_json(const QuadResult& q, const char* method) {
  return Json{{"value", q.value},
              {"error_estimate", q.error_estimate},
              {"evaluations", q.evaluations},
              {"method", method}};
}

}  // namespace

Json rational_json(const Rational& value) {
  return Json{{"fraction", to_fraction_string(value)}, {"decimal", to_decimal(value, 30)}};
}

Json real_json(const Real& value, double error_estimate, const char* method) {
  return Json{{"value", static_cast<double>(value)},
              {"decimal", to_decimal(value, 30)},
              {"error_estimate", error_estimate},
              {"method", method}};
}

Json to_json(const ConstantsReport& r) {
  Json out;
  out["zeta2"] = real_json(r.zeta2, 0, "closed form pi^2/6");
  out["zeta3"] = real_json(r.zeta3, 0, "central binomial series");
  out["I_log"] = quad_json(r.log_integral, "adaptive Gauss-Kronrod, exponential tail map");
  out["c1"] = quad_json(r.c1, "-1 - zeta3 - I_log/2");
  out["c2a"] = real_json(r.c2a.closed_form, r.c2a.difference(), "closed form");
  out["c2a"]["quadrature"] = quad_json(r.c2a.quadrature, "adaptive Gauss-Kronrod");
  out["c2b"] = real_json(r.c2b.closed_form, r.c2b.difference(), "closed form");
  out["c2b"]["quadrature"] = quad_json(r.c2b.quadrature, "adaptive Gauss-Kronrod");
  out["c2c_partial"] = real_json(r.c2c_partial, 0, "series partial sum");
  out["c2c"] = real_json(r.c2c, std::abs(static_cast<double>(r.c2c_series.tail)),
                         r.c2c_series.tail_applied ? "series + tail model (non-rigorous)"
                                                   : "series partial sum, no tail");
  out["c2c"]["terms"] = r.c2c_series.terms;
  out["c2c"]["tail"] = to_decimal(r.c2c_series.tail, 20);
  out["c2c_integral"] = {{"value", r.c2c_integral.value()},
                         {"body", quad_json(r.c2c_integral.body, "adaptive Gauss-Kronrod")},
                         {"tail", r.c2c_integral.tail},
                         {"cutoff", r.c2c_integral.cutoff}};
  out["c2"] = real_json(r.c2, std::abs(static_cast<double>(r.c2c_series.tail)), "c2a + c2b + c2c");
  out["c2_x_form"] = {{"value", r.direct.x_form.value()},
                      {"body", quad_json(r.direct.x_form.body, "adaptive Gauss-Kronrod")},
                      {"tail", r.direct.x_form.tail},
                      {"cutoff", r.direct.x_form.cutoff}};
  out["c2_y_form"] = {{"value", r.direct.y_form.value()},
                      {"body", quad_json(r.direct.y_form.body, "adaptive Gauss-Kronrod")},
                      {"tail", r.direct.y_form.tail},
                      {"cutoff", r.direct.y_form.cutoff}};
  if (r.lambda_integral) {
    out["lambda_integral"] = quad_json(*r.lambda_integral, "nested adaptive Gauss-Kronrod");
  }
  out["series_terms"] = r.c2c_series.terms;
  out["wright_order"] = r.wright_order;
  return out;
}

Json to_json(const ExactExpectation& e) {
  return Json{{"n", e.n},
              {"total", rational_json(e.total)},
              {"tree", rational_json(e.tree_part)},
              {"unicyclic", rational_json(e.unicyclic_part)},
              {"complex", rational_json(e.complex_part)}};
}

Json to_json(const MCEstimate& e) {
  return Json{{"n", e.n},       {"model", e.model}, {"mean", e.mean},
              {"std_error", e.std_error}, {"reps", e.reps},   {"seed", e.seed}};
}

Json to_json(const CensusRecord& r) {
  Json histogram = Json::object();
  for (std::size_t j = 1; j < r.excess_histogram.size(); ++j) {
    if (r.excess_histogram[j] != 0) histogram[std::to_string(j)] = r.excess_histogram[j];
  }
  return Json{{"n", r.n},
              {"lambda", r.lambda},
              {"p", r.p},
              {"reps", r.reps},
              {"seed", r.seed},
              {"components", stat_json(r.components)},
              {"trees", stat_json(r.trees)},
              {"unicyclic", stat_json(r.unicyclic)},
              {"complex", stat_json(r.complex)},
              {"excess_histogram", histogram}};
}

void write_constants_csv(std::ostream& out, const ConstantsReport& r) {
  const Json j = to_json(r);
  out << "name,value,error_estimate,method\n";
  for (const auto& [name, entry] : j.items()) {
    if (!entry.is_object() || !entry.contains("value")) continue;
    out << name << ',';
    if (entry.contains("decimal")) {
      out << entry["decimal"].get<std::string>();
    } else {
      out << entry["value"].dump();
    }
    const double error = entry.contains("error_estimate") ? entry["error_estimate"].get<double>()
                         : entry.contains("body") ? entry["body"]["error_estimate"].get<double>()
                                                  : 0.0;
    const std::string method = entry.contains("method") ? entry["method"].get<std::string>()
                                                        : "truncated integral + analytic tail";
    out << ',' << error << ",\"" << method << "\"\n";
  }
}

void write_mc_csv_header(std::ostream& out) { out << "n,model,reps,seed,mean,std_error\n"; }

void write_mc_csv_row(std::ostream& out, const MCEstimate& e) {
  const auto precision = out.precision(17);
  out << e.n << ',' << e.model << ',' << e.reps << ',' << e.seed << ',' << e.mean << ','
      << e.std_error << '\n';
  out.precision(precision);
}

void write_census_csv_header(std::ostream& out) {
  out << "n,lambda,p,reps,seed,components_mean,components_se,trees_mean,trees_se,"
         "unicyclic_mean,unicyclic_se,complex_mean,complex_se,excess_histogram\n";
}

void write_census_csv_row(std::ostream& out, const CensusRecord& r) {
  const auto precision = out.precision(17);
  out << r.n << ',' << r.lambda << ',' << r.p << ',' << r.reps << ',' << r.seed << ','
      << r.components.mean << ',' << r.components.std_error << ',' << r.trees.mean << ','
      << r.trees.std_error << ',' << r.unicyclic.mean << ',' << r.unicyclic.std_error << ','
      << r.complex.mean << ',' << r.complex.std_error << ',' << histogram_string(r.excess_histogram)
      << '\n';
  out.precision(precision);
}

}  // namespace mstlab
