#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "walgebra/casefile.hpp"
#include "walgebra/errors.hpp"
#include "walgebra/idealkit.hpp"
#include "walgebra/pipeline.hpp"

namespace py = pybind11;
using namespace walgebra;

namespace {

// (report json or "", verified, step, exit code, message)
using RunResult = std::tuple<std::string, bool, int, int, std::string>;

RunResult run(const std::optional<std::string>& path, const std::optional<std::string>& text,
              const std::string& base_dir, const std::optional<std::string>& polarization,
              const std::optional<std::string>& claim, const std::optional<std::string>& fixed_claim,
              const std::optional<std::string>& cache_dir, unsigned jobs, int last_step) {
  pipeline::RunOptions o;
  if (polarization == "zero") o.polarization = slodowy::PolarizationMode::zero;
  else if (polarization == "lagrangian") o.polarization = slodowy::PolarizationMode::lagrangian;
  else if (polarization) throw py::value_error("polarization must be 'zero' or 'lagrangian'");
  o.claim = claim;
  o.fixed_claim = fixed_claim;
  o.cache_dir = cache_dir;
  o.jobs = jobs == 0 ? 1 : jobs;
  o.last_step = last_step;
  py::gil_scoped_release release;
  try {
    pipeline::Outcome out;
    if (path) {
      out = pipeline::run_case_file(*path, o);
    } else {
      casefile::CaseFile c;
      try {
        c = casefile::parse_case(*text, base_dir);
      } catch (const InputError& e) {
        throw pipeline::StepError(0, pipeline::ErrorKind::input, e.what());
      }
      out = pipeline::run_case(c, o);
    }
    return {out.report.dump(), out.verified, 0, out.verified ? 0 : 1, ""};
  } catch (const pipeline::StepError& e) {
    return {"", false, e.step(), e.exit_code(), e.what()};
  }
}

std::vector<idealkit::Polynomial> parse_all(const idealkit::Ring& R, const std::vector<std::string>& polys) {
  std::vector<idealkit::Polynomial> out;
  for (const auto& p : polys) out.push_back(idealkit::parse_polynomial(R, p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_walgebra, m) {
  m.doc() = "Bindings for the walgebra pipeline and ideal toolkit";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConsistencyError>(m, "ConsistencyError", PyExc_RuntimeError);

  m.def("algebra_info", [](const std::string& type, int rank) {
    if (type.size() != 1) throw py::value_error("type must be a single letter");
    try {
      return pipeline::algebra_info(type[0], rank).dump();
    } catch (const pipeline::StepError& e) {
      throw py::value_error(e.what());
    }
  }, py::arg("type"), py::arg("rank"));

  m.def("run", &run, py::arg("path") = py::none(), py::arg("text") = py::none(), py::arg("base_dir") = ".",
        py::arg("polarization") = py::none(), py::arg("claim") = py::none(), py::arg("fixed_claim") = py::none(),
        py::arg("cache_dir") = py::none(), py::arg("jobs") = 1, py::arg("last_step") = 8);

  m.def("groebner", [](const std::vector<std::string>& names, const std::vector<std::string>& polys) {
    idealkit::Ring R{names, {}};
    std::vector<std::string> out;
    for (const auto& p : idealkit::groebner(R, parse_all(R, polys))) out.push_back(idealkit::format(R, p));
    return out;
  }, py::arg("variables"), py::arg("polynomials"));

  m.def("dimension", [](const std::vector<std::string>& names, const std::vector<std::string>& polys) {
    idealkit::Ring R{names, {}};
    return idealkit::dimension(R, idealkit::groebner(R, parse_all(R, polys)));
  }, py::arg("variables"), py::arg("polynomials"));

  m.def("render_text", [](const std::string& report) {
    return pipeline::render_text(pipeline::Json::parse(report));
  }, py::arg("report_json"));
}
