#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dgla/cli.hpp"
#include "dgla/corpus.hpp"

namespace py = pybind11;
using namespace dgla;

namespace {

// Stages cross the boundary as JSON text; the Python side decodes it.
std::string stage_json(const Stage& s) {
  RunReport r;
  r.stages.push_back(s);
  return emit_json(r);
}

CoefficientRing ring_for(int order, const std::string& var) {
  if (order < 1 || order > kMaxOrder) throw InputError("order must be in 1.." + std::to_string(kMaxOrder));
  return CoefficientRing::single(order, var);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact DGLA deformation engine";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<Dgla>(m, "Dgla")
      .def_property_readonly("name", &Dgla::name)
      .def_property_readonly("generators",
                             [](const Dgla& g) {
                               std::vector<std::pair<std::string, int>> out;
                               for (const auto& gen : g.generators()) out.emplace_back(gen.name, gen.degree);
                               return out;
                             })
      .def_property_readonly("dims", [](const Dgla& g) { return g.dims().map(); })
      .def("to_json", [](const Dgla& g) { return dgla_to_json(g).dump(); })
      .def("violations",
           [](const Dgla& g) {
             std::vector<std::string> out;
             for (const auto& v : validate_dgla(g).violations) out.push_back(v.message);
             return out;
           })
      .def("__eq__", [](const Dgla& a, const Dgla& b) { return a == b; })
      .def("__repr__", [](const Dgla& g) { return "<Dgla " + g.name() + " with " + std::to_string(g.size()) + " generators>"; });

  m.def("builtin_names", &builtin_names);
  m.def("builtin_example", &builtin_example, py::arg("name"));
  m.def("parse_dgla", [](const std::string& text, bool allow_invalid) { return parse_dgla(text, allow_invalid); },
        py::arg("text"), py::arg("allow_invalid") = false);
  m.def("load_dgla", &load_dgla, py::arg("path"), py::arg("allow_invalid") = false);

  m.def("homology", [](const Dgla& g) { return stage_json(homology_stage(g)); });
  m.def("sdr", [](const Dgla& g) { return stage_json(sdr_stage(g, build_sdr(g))); });
  m.def("hodge", [](const Dgla& g) { return stage_json(hodge_stage(g, build_sdr(g))); });
  m.def(
      "mc_solve",
      [](const Dgla& g, const std::string& direction, int order, const std::string& var) {
        const SdrData sdr = build_sdr(g);
        return stage_json(mc_stage(g, sdr, harmonic_combination(g, sdr, parse_coordinates(direction),
                                                                 ring_for(order, var))));
      },
      py::arg("g"), py::arg("direction"), py::arg("order") = kDefaultOrder, py::arg("var") = "t");
  m.def(
      "obstruction",
      [](const Dgla& g, const std::string& direction, int order, const std::string& var) {
        const SdrData sdr = build_sdr(g);
        return stage_json(obstruction_stage(
            g, sdr, harmonic_combination(g, sdr, parse_coordinates(direction), ring_for(order, var))));
      },
      py::arg("g"), py::arg("direction"), py::arg("order") = kDefaultOrder, py::arg("var") = "t");
  m.def(
      "kuranishi",
      [](const Dgla& g, const std::string& element, int order, bool inverse, const std::string& var) {
        const SdrData sdr = build_sdr(g);
        return stage_json(kuranishi_stage(g, sdr, parse_element(g, ring_for(order, var), element, 1), inverse));
      },
      py::arg("g"), py::arg("element"), py::arg("order") = kDefaultOrder, py::arg("inverse") = false,
      py::arg("var") = "t");
  m.def(
      "gauge_equivalent",
      [](const Dgla& g, const std::string& a, const std::string& b, int order, const std::string& var) {
        const CoefficientRing ring = ring_for(order, var);
        return stage_json(gauge_stage(g, build_sdr(g), parse_element(g, ring, a, 1), parse_element(g, ring, b, 1)));
      },
      py::arg("g"), py::arg("a"), py::arg("b"), py::arg("order") = kDefaultOrder, py::arg("var") = "t");
  m.def("selftest", [] { return emit_json(selftest_report()); });
  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
