#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "periplectic/report.hpp"

namespace py = pybind11;
using namespace peri;
using json = nlohmann::ordered_json;

namespace {

Weight to_weight(const Setting& s, const std::vector<std::string>& coords) {
  if (coords.size() != 2) throw std::invalid_argument("lambda needs two coordinates r, s");
  Weight w;
  for (const auto& c : coords) w.push_back(s.field->parse(c));
  s.require_lambda(w);
  return w;
}

std::string lambda_list(int p, const std::string& chi, const std::vector<int>& params) {
  const Setting s = Setting::make(p, parse_chi_kind(chi), params);
  json out = json::array();
  for (const auto& w : s.lambdas()) out.push_back(weight_json(*s.field, w));
  return out.dump();
}

std::string delta_of(int p, const std::string& chi, const std::vector<std::string>& lambda, const std::vector<int>& params) {
  const Setting s = Setting::make(p, parse_chi_kind(chi), params);
  const Fe d = delta(*s.field, to_weight(s, lambda));
  return json{{"delta", fe_json(*s.field, d)}, {"typical", d.v != 0}}.dump();
}

std::string series(int p, const std::string& chi, const std::vector<std::string>& lambda, std::uint64_t seed,
                   const std::vector<int>& params, bool timing) {
  const Setting s = Setting::make(p, parse_chi_kind(chi), params);
  SeriesOptions o;
  o.seed = seed;
  o.timing = timing;
  CompositionReport r;
  {
    py::gil_scoped_release release;
    r = composition_series(s, to_weight(s, lambda), o);
  }
  json j = series_json(s, r);
  j["bracket"] = bracket_notation(*s.field, r.lambda, r.factors);
  return j.dump();
}

std::string maxvec(int p, const std::string& chi, const std::vector<std::string>& lambda, const std::vector<int>& params) {
  const Setting s = Setting::make(p, parse_chi_kind(chi), params);
  py::gil_scoped_release release;
  const KacModule k = build_kac(s, to_weight(s, lambda));
  return maxvec_json(k, maximal_vectors(k)).dump();
}

std::string kac_build(int p, const std::string& chi, const std::vector<std::string>& lambda, const std::vector<int>& params) {
  const Setting s = Setting::make(p, parse_chi_kind(chi), params);
  py::gil_scoped_release release;
  const KacModule k = build_kac(s, to_weight(s, lambda));
  const KacReport r = verify_module(k, s.chi);
  json census = json::object();
  for (const auto& [g, n] : grading_census(k)) census[std::to_string(g)] = n;
  return json{{"dim", k.dim()}, {"base_dim", k.base.dim()}, {"grading", census}, {"ok", r.ok()}}.dump();
}

std::string verify(int p, const std::vector<std::string>& kinds, int jobs, std::uint64_t seed) {
  VerifyOptions o;
  o.p = p;
  o.jobs = jobs;
  o.seed = seed;
  if (!kinds.empty()) {
    o.kinds.clear();
    for (const auto& k : kinds) o.kinds.push_back(parse_chi_kind(k));
  }
  py::gil_scoped_release release;
  return verify_json(verify_all(o)).dump();
}

std::string typicality_scan(int n, int p) {
  const TypicalityScan scan = weyl_typicality_scan(n, p);
  json ce = json::array();
  for (const auto& c : scan.counterexamples) ce.push_back({{"lambda", c.lambda}, {"reason", c.reason}});
  return json{{"n", n},
              {"p", p},
              {"weights", scan.weights},
              {"atypical", scan.delta_zero},
              {"route_mismatches", scan.route_mismatches},
              {"counterexamples", ce}}
      .dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kac modules of the restricted Lie superalgebra p(3)";
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  m.def("lambda_list", &lambda_list, py::arg("p"), py::arg("chi"), py::arg("params") = std::vector<int>{});
  m.def("delta", &delta_of, py::arg("p"), py::arg("chi"), py::arg("lambda_"), py::arg("params") = std::vector<int>{});
  m.def("series", &series, py::arg("p"), py::arg("chi"), py::arg("lambda_"), py::arg("seed") = 1,
        py::arg("params") = std::vector<int>{}, py::arg("timing") = true);
  m.def("maxvec", &maxvec, py::arg("p"), py::arg("chi"), py::arg("lambda_"), py::arg("params") = std::vector<int>{});
  m.def("kac_build", &kac_build, py::arg("p"), py::arg("chi"), py::arg("lambda_"), py::arg("params") = std::vector<int>{});
  m.def("verify", &verify, py::arg("p"), py::arg("kinds") = std::vector<std::string>{}, py::arg("jobs") = 1,
        py::arg("seed") = 1);
  m.def("typicality_scan", &typicality_scan, py::arg("n"), py::arg("p"));
}
