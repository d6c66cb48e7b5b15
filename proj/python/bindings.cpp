#include "dkit/job.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

namespace py = pybind11;

namespace {

std::optional<dkit::OrbitMethod> method_from(const std::optional<std::string>& s) {
  if (!s) return std::nullopt;
  if (*s == "eliminate") return dkit::OrbitMethod::Eliminate;
  if (*s == "stabilizer") return dkit::OrbitMethod::Stabilizer;
  throw py::value_error("orbit_method must be 'eliminate' or 'stabilizer'");
}

py::tuple run(const std::string& text, const std::optional<std::string>& command, bool verify,
              std::optional<int> jet_level, const std::optional<std::string>& orbit_method) {
  dkit::RunOptions opts;
  opts.verify = verify;
  opts.jet_level = jet_level;
  opts.orbit_method = method_from(orbit_method);
  if (command) {
    opts.command = dkit::command_from_name(*command);
    if (!opts.command) throw py::value_error("unknown command '" + *command + "'");
  }
  dkit::JobResult r;
  {
    py::gil_scoped_release release;
    r = dkit::run_job_text(text, opts);
  }
  return py::make_tuple(r.exit_code, r.report.dump());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite determinacy of power series matrices";

  py::register_exception<dkit::JobError>(m, "JobError", PyExc_ValueError);

  m.def("run_job", &run, py::arg("text"), py::arg("command") = py::none(), py::arg("verify") = false,
        py::arg("jet_level") = py::none(), py::arg("orbit_method") = py::none(),
        "Run a job given as line-format or JSON text; returns (exit_code, report_json).");
  m.def(
      "normalize_job", [](const std::string& text) { return dkit::serialize_job(dkit::parse_job(text)); },
      py::arg("text"), "Canonical line format of a job; raises JobError when invalid.");
  m.def(
      "job_json", [](const std::string& text) { return dkit::job_to_json(dkit::parse_job(text)).dump(); },
      py::arg("text"), "JSON form of a job; raises JobError when invalid.");
}
