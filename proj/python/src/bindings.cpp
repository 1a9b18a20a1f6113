#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "orlicz/composition.hpp"
#include "orlicz/config.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/norm.hpp"
#include "orlicz/report.hpp"
#include "orlicz/young.hpp"

namespace py = pybind11;
using namespace orlicz;

namespace {

Json parse(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ConfigError(what, std::string("invalid JSON: ") + e.what());
  }
}

py::dict norm_dict(const NormResult& r) {
  py::dict out;
  out["value"] = r.value;
  out["status"] = to_string(r.status);
  out["tolerance"] = r.tolerance;
  out["truncation"] = r.truncation ? py::cast(*r.truncation) : py::none();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orlicz and Lorentz norm toolkit";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);
  py::register_exception<DegenerateInputError>(m, "DegenerateInputError", PyExc_ArithmeticError);
  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_ArithmeticError);

  py::class_<YoungFunction>(m, "YoungFunction")
      .def_static("from_json", [](const std::string& text) { return parse_young(parse(text, "phi"), "phi"); })
      .def_static("power", &YoungFunction::power, py::arg("p"))
      .def_static("llogl", &YoungFunction::llogl)
      .def_static("exp_minus_one", &YoungFunction::exp_minus_one)
      .def_static("linear", &YoungFunction::linear)
      .def("__call__", &eval_young, py::arg("t"))
      .def("left_derivative", &left_derivative, py::arg("t"))
      .def("complementary", &complementary, py::arg("t"))
      .def("inverse", &generalized_inverse, py::arg("t"))
      .def("complementary_inverse", &complementary_inverse, py::arg("t"))
      .def("to_json", [](const YoungFunction& phi) { return to_json(phi).dump(); })
      .def("__repr__", [](const YoungFunction& phi) { return "YoungFunction(" + phi.describe() + ")"; });

  m.def(
      "luxemburg_norm",
      [](const YoungFunction& phi, const std::string& f, const std::string& space) {
        return norm_dict(luxemburg_norm(phi, parse_function(parse(f, "f")), parse_space(parse(space, "space"))));
      },
      py::arg("phi"), py::arg("f"), py::arg("space"));

  m.def(
      "lorentz_quasinorm",
      [](double p, double q, const std::string& f, const std::string& space) {
        return norm_dict(lorentz_quasinorm(p, q, parse_function(parse(f, "f")), parse_space(parse(space, "space"))));
      },
      py::arg("p"), py::arg("q"), py::arg("f"), py::arg("space"));

  m.def("indicator_luxemburg_closed_form", &indicator_luxemburg_closed_form, py::arg("phi"), py::arg("measure"));
  m.def("indicator_lorentz_closed_form", &indicator_lorentz_closed_form, py::arg("p"), py::arg("q"),
        py::arg("measure"));

  m.def(
      "nabla2_holds",
      [](const YoungFunction& phi) {
        return check_nabla2(phi, default_nabla2_candidates(), default_young_grid()).holds;
      },
      py::arg("phi"));

  m.def(
      "certify_blocks",
      [](const std::string& tau, const YoungFunction& phi, double p, std::int64_t n_max) {
        const auto r = certify_min_D(parse_tau(parse(tau, "tau")), phi, p, blocks_family(n_max));
        py::dict out;
        out["passed"] = r.passed;
        out["min_D"] = r.min_D_estimate;
        out["growth_exponent"] = r.growth_exponent;
        out["sets"] = r.per_set_margins.size();
        return out;
      },
      py::arg("tau"), py::arg("phi"), py::arg("p"), py::arg("n_max") = 1000);

  m.def(
      "run",
      [](const std::string& config) {
        const auto outcome = run(parse_config(parse(config, "config")));
        return py::make_tuple(outcome.envelope.dump(2), outcome.exit_code, outcome.csv);
      },
      py::arg("config"), "Runs a config document; returns (envelope JSON, exit code, CSV).");

  m.attr("__version__") = tool_version();
}
