#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mstlab/constants.hpp"
#include "mstlab/errors.hpp"
#include "mstlab/exact_engine.hpp"
#include "mstlab/excursion.hpp"
#include "mstlab/graph_counts.hpp"
#include "mstlab/mc_sim.hpp"
#include "mstlab/report.hpp"
#include "mstlab/verify.hpp"

namespace py = pybind11;
using namespace mstlab;

namespace {

// Structured results cross the boundary as JSON text; the Python layer decodes them.
std::string dump(const Json& j) { return j.dump(); }

Rational parse_rational(const std::string& text) {
  Rational out;
  if (out.set_str(text, 10) != 0) throw DomainError("not a rational number: '" + text + "'");
  out.canonicalize();
  return out;
}

}  // namespace

PYBIND11_MODULE(_mstlab, m) {
  m.doc() = "Native core of mstlab";

  auto base = py::register_exception<Error>(m, "Error");
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
  py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());
  py::register_exception<TruncationError>(m, "TruncationError", base.ptr());
  py::register_exception<QuadratureError>(m, "QuadratureError", base.ptr());
  py::register_exception<MethodDisagreement>(m, "MethodDisagreement", base.ptr());

  m.def("connected_graph_counts", [](int k_max) {
    const CountTable table = build_count_table(k_max);
    std::vector<std::vector<std::string>> rows(k_max + 1);
    for (int k = 1; k <= k_max; ++k) {
      for (int l = 0; l <= k * (k - 1) / 2; ++l) rows[k].push_back(table.at(k, l).get_str());
    }
    return rows;
  }, py::arg("k_max"));

  m.def("b_term", [](int n, int k, int j) { return to_fraction_string(b_term(n, k, j)); },
        py::arg("n"), py::arg("k"), py::arg("j"));
  m.def("a_term", [](int n, int k, int j) {
    return to_fraction_string(a_term(n, k, j, build_count_table(k)));
  }, py::arg("n"), py::arg("k"), py::arg("j"));
  m.def("exact_expected_mst", [](int n, int max_n) {
    py::gil_scoped_release release;
    ExactOptions options;
    options.max_n = max_n;
    return dump(to_json(exact_expected_mst(n, build_count_table(std::max(n, 1)), options)));
  }, py::arg("n"), py::arg("max_n") = 30);
  m.def("expected_component_count", [](int n, const std::string& p) {
    return to_fraction_string(expected_component_count(n, parse_rational(p), build_count_table(n)));
  }, py::arg("n"), py::arg("p"));

  m.def("wright_constants", [](int max_order, unsigned digits) {
    const WrightTable table = wright_table(max_order, digits);
    std::vector<double> out;
    for (const auto& w : table.values()) out.push_back(static_cast<double>(w));
    return out;
  }, py::arg("max_order"), py::arg("digits") = kDefaultDigits);
  m.def("psi", [](double t, int max_order) {
    return static_cast<double>(psi(Real(t), wright_table(max_order)).value);
  }, py::arg("t"), py::arg("max_order") = 400);

  m.def("c1", [](double tolerance) { return c1(tolerance).value; }, py::arg("tolerance") = 1e-10);
  m.def("constants", [](int series_terms, bool tail, bool lambda_integral) {
    py::gil_scoped_release release;
    ConstantsOptions options;
    options.series_terms = series_terms;
    options.tail = tail;
    options.lambda_integral = lambda_integral;
    return dump(to_json(c2_total(options)));
  }, py::arg("series_terms") = 1000, py::arg("tail") = true, py::arg("lambda_integral") = false);
  m.def("big_F", &big_F, py::arg("x"), py::arg("lam"));
  m.def("f_of_lambda", [](const std::vector<double>& lambdas) {
    py::gil_scoped_release release;
    const WrightTable table = wright_table(3001);
    const DampedPsi2 psi2(table);
    std::vector<double> out;
    for (double lambda : lambdas) out.push_back(f_of_lambda(lambda, psi2).value);
    return out;
  }, py::arg("lambdas"));
  m.def("gaussian_identity_residual", &gaussian_identity_residual, py::arg("x"));

  m.def("mst_length", [](int n, const std::string& model, std::uint64_t seed, std::uint64_t rep) {
    return mst_length(n, parse_weight_model(model), seed, rep);
  }, py::arg("n"), py::arg("model") = "uniform", py::arg("seed") = 1, py::arg("rep") = 0);
  m.def("estimate_mean_mst", [](int n, std::uint64_t reps, const std::string& model,
                                std::uint64_t seed) {
    const WeightModel w = parse_weight_model(model);
    py::gil_scoped_release release;
    return dump(to_json(estimate_mean_mst(n, reps, w, seed)));
  }, py::arg("n"), py::arg("reps"), py::arg("model") = "uniform", py::arg("seed") = 1);
  m.def("coupled_exp_uniform_diff", [](int n, std::uint64_t reps, std::uint64_t seed) {
    py::gil_scoped_release release;
    return dump(to_json(coupled_exp_uniform_diff(n, reps, seed, true)));
  }, py::arg("n"), py::arg("reps"), py::arg("seed") = 1);
  m.def("gnp_component_census", [](int n, double lambda, std::uint64_t reps, std::uint64_t seed) {
    py::gil_scoped_release release;
    return dump(to_json(gnp_component_census(n, lambda, reps, seed)));
  }, py::arg("n"), py::arg("lam"), py::arg("reps"), py::arg("seed") = 1);
  m.def("brute_force_expected_components", [](int n, const std::string& p) {
    return to_fraction_string(brute_force_expected_components(n, parse_rational(p)));
  }, py::arg("n"), py::arg("p"));

  m.def("run_acceptance", [](const std::vector<int>& criteria, std::uint64_t mst_reps,
                             std::uint64_t census_reps) {
    py::gil_scoped_release release;
    VerifyOptions options;
    options.only = criteria;
    options.mst_reps = mst_reps;
    options.census_reps = census_reps;
    return dump(to_json(run_acceptance(options)));
  }, py::arg("criteria") = std::vector<int>{}, py::arg("mst_reps") = 1000000,
     py::arg("census_reps") = 1000000);
}
