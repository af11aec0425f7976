// Thin bindings: presentations and reports cross the boundary as JSON text,
// the Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fihom/fuzz.hpp"

namespace py = pybind11;
using namespace fihom;

namespace {

std::string invariants(const std::string& text, int smax, int window, bool allow_uncertified) {
  const auto p = parse_presentation(text);
  const int w = window > 0 ? window : p.window > 0 ? p.window : required_window(p.bounds(), smax);
  return with_field(p.field, [&](const auto& f) {
    InvariantOptions io;
    io.allow_uncertified = allow_uncertified;
    return dump(to_json(invariant_report(compile(f, p, w), smax, io)));
  });
}

std::string complex_report(const std::string& text, int max_window) {
  const auto p = parse_presentation(text);
  return with_field(p.field, [&](const auto& f) {
    return with_window(f, p, dmax(0, p.bounds().torsion_window()), max_window,
                       [](const auto& v) { return dump(to_json(filtered_complex(v))); });
  });
}

std::string growth_report(const std::string& text, int max_window) {
  const auto p = parse_presentation(text);
  return with_field(p.field, [&](const auto& f) {
    return with_window(f, p, dmax(0, p.bounds().torsion_window()), max_window,
                       [](const auto& v) { return dump(to_json(fit_polynomial(v))); });
  });
}

std::string check(const std::string& text, int smax, std::vector<std::string> checks) {
  BatteryOptions opt;
  opt.smax = smax;
  opt.checks = std::move(checks);
  return dump(to_json(run_battery(parse_presentation(text), opt)));
}

RandomProfile profile(const std::string& field, int group_order, int gmax, int genmax, int rmax, int relmax) {
  RandomProfile prof;
  prof.field = field == "p" ? FieldSpec::prime(101) : field_from_json(Json(field));
  prof.max_group_order = group_order;
  prof.gmax = gmax;
  prof.genmax = genmax;
  prof.rmax = rmax;
  prof.relmax = relmax;
  return prof;
}

}  // namespace

PYBIND11_MODULE(_fihom, m) {
  m.doc() = "Homological invariants of finitely presented FI_G-modules";

  auto window_error = py::register_exception<WindowError>(m, "WindowError", PyExc_RuntimeError);
  py::register_exception<PropertyViolation>(m, "PropertyViolation", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ContractViolation& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });
  (void)window_error;

  m.def("property_names", &property_names);
  m.def("invariants", &invariants, py::arg("presentation"), py::arg("smax") = 3, py::arg("window") = 0,
        py::arg("allow_uncertified") = false, py::call_guard<py::gil_scoped_release>());
  m.def("complex", &complex_report, py::arg("presentation"), py::arg("max_window") = 20,
        py::call_guard<py::gil_scoped_release>());
  m.def("growth", &growth_report, py::arg("presentation"), py::arg("max_window") = 20,
        py::call_guard<py::gil_scoped_release>());
  m.def("check", &check, py::arg("presentation"), py::arg("smax") = 3, py::arg("checks") = std::vector<std::string>{},
        py::call_guard<py::gil_scoped_release>());
  m.def(
      "random_presentation",
      [](std::uint64_t seed, std::uint64_t trial, const std::string& field, int group_order, int gmax, int genmax, int rmax,
         int relmax) {
        auto rng = Rng::for_trial(seed, trial);
        return dump(to_json(random_presentation(rng, profile(field, group_order, gmax, genmax, rmax, relmax))));
      },
      py::arg("seed"), py::arg("trial"), py::arg("field") = "p", py::arg("group_order") = 2, py::arg("gmax") = 2,
      py::arg("genmax") = 2, py::arg("rmax") = 3, py::arg("relmax") = 3);
  m.def(
      "fuzz",
      [](std::uint64_t seed, int trials, const std::string& field, int group_order, int gmax, int genmax, int rmax, int relmax,
         int smax, std::vector<std::string> checks, int threads) {
        FuzzConfig c;
        c.seed = seed;
        c.trials = trials;
        c.profile = profile(field, group_order, gmax, genmax, rmax, relmax);
        c.battery.smax = smax;
        c.battery.checks = std::move(checks);
        c.threads = threads;
        py::gil_scoped_release nogil;
        return dump(to_json(run_fuzz(c)));
      },
      py::arg("seed") = 42, py::arg("trials") = 50, py::arg("field") = "p", py::arg("group_order") = 2, py::arg("gmax") = 2,
      py::arg("genmax") = 2, py::arg("rmax") = 3, py::arg("relmax") = 3, py::arg("smax") = 3,
      py::arg("checks") = std::vector<std::string>{}, py::arg("threads") = 0);
}
