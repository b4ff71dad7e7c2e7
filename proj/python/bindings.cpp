#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pcol/config.hpp"
#include "pcol/discharging.hpp"
#include "pcol/graph.hpp"
#include "pcol/io.hpp"
#include "pcol/named.hpp"
#include "pcol/reducibility.hpp"
#include "pcol/solver.hpp"

namespace py = pybind11;
using namespace pcol;

PYBIND11_MODULE(_core, m) {
  m.doc() = "packing-coloring core: solver, configuration checker, discharging";

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init<int, const std::vector<std::pair<int, int>>&>(), py::arg("n"),
           py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("add_edge", &Graph::add_edge)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("edges", &Graph::edges)
      .def("connected", &Graph::connected)
      .def("is_subcubic", &Graph::is_subcubic)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" +
               std::to_string(g.edge_count()) + ")";
      });

  py::class_<PackingSpec>(m, "PackingSpec")
      .def(py::init<std::vector<int>>(), py::arg("radii"))
      .def_static("parse", &PackingSpec::parse)
      .def_property_readonly("radii", &PackingSpec::radii)
      .def_property_readonly("color_count", &PackingSpec::color_count);

  py::class_<Violation>(m, "Violation")
      .def_readonly("color", &Violation::color)
      .def_readonly("u", &Violation::u)
      .def_readonly("v", &Violation::v)
      .def_readonly("dist", &Violation::dist);

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("valid", &ValidationReport::valid)
      .def_readonly("violations", &ValidationReport::violations);

  py::class_<RefutationCertificate>(m, "RefutationCertificate")
      .def_readonly("node_count", &RefutationCertificate::node_count)
      .def_readonly("exhaustive", &RefutationCertificate::exhaustive)
      .def_readonly("witness", &RefutationCertificate::witness)
      .def("uncolorable", &RefutationCertificate::uncolorable);

  py::class_<SharpnessReport>(m, "SharpnessReport")
      .def_readonly("ok", &SharpnessReport::ok)
      .def_readonly("failures", &SharpnessReport::failures)
      .def_readonly("doubled_coloring", &SharpnessReport::doubled_coloring);

  py::class_<PendantTriple>(m, "PendantTriple")
      .def(py::init([](int b, int p1, int p2) {
             return PendantTriple{b, p1, p2};
           }),
           py::arg("boundary"), py::arg("p1"), py::arg("p2"))
      .def_readonly("boundary", &PendantTriple::boundary)
      .def_readonly("p1", &PendantTriple::p1)
      .def_readonly("p2", &PendantTriple::p2);

  py::class_<Configuration>(m, "Configuration")
      .def(py::init<>())
      .def_readwrite("name", &Configuration::name)
      .def_readwrite("base", &Configuration::base)
      .def_readwrite("extra", &Configuration::extra)
      .def_readwrite("triples", &Configuration::triples)
      .def("validate", &Configuration::validate);

  py::class_<CheckStats>(m, "CheckStats")
      .def_readonly("precolorings_total", &CheckStats::precolorings_total)
      .def_readonly("pruned_inconsistent", &CheckStats::pruned_inconsistent)
      .def_readonly("extended_ok", &CheckStats::extended_ok);

  py::class_<CounterexampleWitness>(m, "CounterexampleWitness")
      .def_readonly("pattern_indices", &CounterexampleWitness::pattern_indices)
      .def_readonly("precoloring", &CounterexampleWitness::precoloring);

  py::class_<ReducibilityResult>(m, "ReducibilityResult")
      .def_readonly("name", &ReducibilityResult::name)
      .def_readonly("reducible", &ReducibilityResult::reducible)
      .def_readonly("witnesses", &ReducibilityResult::witnesses)
      .def_readonly("stats", &ReducibilityResult::stats)
      .def_readonly("seconds", &ReducibilityResult::seconds);

  m.def("build_named_graph", &build_named_graph, py::arg("name"));
  m.def("petersen_graph", &petersen_graph);
  m.def("sharpness_gadget", &sharpness_gadget);
  m.def("sharpness_doubled", &sharpness_doubled);
  m.def(
      "build_named_configuration",
      [](const std::string& name) {
        return std::get<Configuration>(build_named(name));
      },
      py::arg("name"));

  m.def(
      "verify",
      [](const Graph& g, const PackingSpec& spec, const Coloring& c) {
        return verify(g, spec, c);
      },
      py::arg("graph"), py::arg("spec"), py::arg("coloring"));
  m.def(
      "extend",
      [](const Graph& g, const PackingSpec& spec, const Coloring& partial) {
        return extend(g, spec, partial);
      },
      py::arg("graph"), py::arg("spec"), py::arg("partial"));
  m.def("prove_uncolorable", &prove_uncolorable, py::arg("graph"), py::arg("spec"));
  m.def("sdr_assign", &sdr_assign, py::arg("demands"));
  m.def("validate_sharpness_gadget", &validate_sharpness_gadget, py::arg("graph"),
        py::arg("v1"));

  m.def("parse_config_file", &parse_config_file, py::arg("text"));
  m.def("serialize_config_file", &serialize_config_file, py::arg("configs"));
  m.def("sample_config_text", [] { return sample_config_text(); });
  m.def(
      "check_reducible",
      [](const Configuration& cfg, bool exhaustive_first, int witness_limit,
         int workers) {
        CheckOptions opts;
        opts.exhaustive_first = exhaustive_first;
        opts.witness_limit = witness_limit;
        opts.workers = workers;
        return check_reducible(cfg, opts);
      },
      py::arg("configuration"), py::arg("exhaustive_first") = false,
      py::arg("witness_limit") = 1, py::arg("workers") = 1);
  m.def("format_result_lines", &format_result_lines, py::arg("result"));
  m.def("result_to_json", &result_to_json, py::arg("result"),
        py::arg("with_timing") = true);

  m.def(
      "face_lengths",
      [](const Graph& g, const std::vector<std::vector<int>>& order) {
        RotationSystem rot{order};
        auto faces = trace_faces(g, rot);
        std::vector<int> lengths;
        for (const auto& face : faces.faces) lengths.push_back(face.length());
        return lengths;
      },
      py::arg("graph"), py::arg("rotation"));
  m.def(
      "discharge_report",
      [](const Graph& g, const std::vector<std::vector<int>>& order) {
        return discharge_report_json(g, RotationSystem{order});
      },
      py::arg("graph"), py::arg("rotation"));
  m.def(
      "named_rotation",
      [](const std::string& name) -> std::optional<std::vector<std::vector<int>>> {
        auto rot = named_rotation(name);
        if (!rot) return std::nullopt;
        return rot->order;
      },
      py::arg("name"));

  m.def("parse_edge_list", &parse_edge_list, py::arg("text"));
  m.def("serialize_edge_list", &serialize_edge_list, py::arg("graph"));

  std::vector<std::vector<int>> table;
  for (const auto& pattern : kOuterPatterns) {
    table.push_back({pattern[0], pattern[1], pattern[2]});
  }
  m.attr("OUTER_PATTERNS") = table;
  m.attr("FIRST_TRIPLE_COUNT") = kFirstTripleCount;
}
