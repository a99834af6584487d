// Python bindings for the solver.  Thin by intent: graphs, labelings and
// distributions cross the boundary as plain data, results come back as the
// same structs the C++ callers see.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pebblekit/io.hpp"
#include "pebblekit/psi.hpp"
#include "pebblekit/verify.hpp"

namespace py = pybind11;
using namespace pebblekit;

PYBIND11_MODULE(_pebblekit, m) {
  m.doc() = "edge cover pebbling solver";

  py::enum_<Family>(m, "Family")
      .value("Comb", Family::Comb)
      .value("Star", Family::Star)
      .value("SubdividedStar", Family::SubdividedStar)
      .value("Bistar", Family::Bistar)
      .value("SubdividedBistar", Family::SubdividedBistar)
      .value("TwoStarsDelta", Family::TwoStarsDelta)
      .value("DegreeSplitBistar", Family::DegreeSplitBistar)
      .value("StarOfStars", Family::StarOfStars);

  py::enum_<CoverRule>(m, "CoverRule")
      .value("RestingCounts", CoverRule::RestingCounts)
      .value("MustReceive", CoverRule::MustReceive);

  py::enum_<ParityRule>(m, "ParityRule")
      .value("InitialOnly", ParityRule::InitialOnly)
      .value("Always", ParityRule::Always);

  py::enum_<Quantifier>(m, "Quantifier")
      .value("ExactSize", Quantifier::ExactSize)
      .value("AllSizesAtLeast", Quantifier::AllSizesAtLeast);

  py::enum_<PsiStatus>(m, "PsiStatus")
      .value("Determined", PsiStatus::Determined)
      .value("UndeterminedAtCap", PsiStatus::UndeterminedAtCap);

  py::class_<Edge>(m, "Edge")
      .def(py::init<int, int>())
      .def_readonly("u", &Edge::u)
      .def_readonly("v", &Edge::v)
      .def("__repr__", [](const Edge& e) {
        return "Edge(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
      });

  py::class_<FamilySpec>(m, "FamilySpec")
      .def(py::init<Family, int>(), py::arg("family"), py::arg("n"))
      .def_readwrite("family", &FamilySpec::family)
      .def_readwrite("n", &FamilySpec::n);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int, std::vector<Edge>, std::vector<std::string>>(),
           py::arg("vertex_count"), py::arg("edges"),
           py::arg("names") = std::vector<std::string>{})
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("edges", &Graph::edges)
      .def("edge_id", &Graph::edge_id)
      .def("line_neighbors", &Graph::line_neighbors)
      .def("edge_distance", &Graph::edge_distance)
      .def("vertex_name", &Graph::vertex_name)
      .def("edge_name", &Graph::edge_name);

  py::class_<VertexAssignment>(m, "VertexAssignment")
      .def(py::init<std::vector<int>>())
      .def_readwrite("values", &VertexAssignment::values);

  py::class_<EdgeLabeling>(m, "EdgeLabeling")
      .def("labels", &EdgeLabeling::labels)
      .def("label", &EdgeLabeling::label)
      .def_property_readonly("zero_count", &EdgeLabeling::zero_count)
      .def_property_readonly("one_count", &EdgeLabeling::one_count)
      .def("balanced", &EdgeLabeling::balanced);

  py::class_<Distribution>(m, "Distribution")
      .def(py::init<>())
      .def(py::init([](std::vector<int> counts) {
             Distribution d;
             d.counts = std::move(counts);
             return d;
           }),
           py::arg("counts"))
      .def_readwrite("counts", &Distribution::counts)
      .def("total", &Distribution::total);

  py::class_<GameSemantics>(m, "GameSemantics")
      .def(py::init<>())
      .def_readwrite("cover_rule", &GameSemantics::cover_rule)
      .def_readwrite("parity_rule", &GameSemantics::parity_rule)
      .def_readwrite("quantifier", &GameSemantics::quantifier);

  py::class_<Move>(m, "Move")
      .def(py::init<int, int>())
      .def_readwrite("from_edge", &Move::from)
      .def_readwrite("to_edge", &Move::to)
      .def("__repr__", [](const Move& mv) {
        return "Move(" + std::to_string(mv.from) + " -> " +
               std::to_string(mv.to) + ")";
      });

  py::class_<SolveLimits>(m, "SolveLimits")
      .def(py::init<>())
      .def_readwrite("memo_cap", &SolveLimits::memo_cap);

  py::class_<SolveOutcome>(m, "SolveOutcome")
      .def_readonly("solvable", &SolveOutcome::solvable)
      .def_readonly("certificate", &SolveOutcome::certificate)
      .def_readonly("nodes", &SolveOutcome::nodes)
      .def_readonly("memo_hits", &SolveOutcome::memo_hits);

  py::class_<PsiQuery>(m, "PsiQuery")
      .def(py::init<>())
      .def_readwrite("semantics", &PsiQuery::semantics)
      .def_readwrite("m_cap", &PsiQuery::m_cap)
      .def_readwrite("use_symmetry", &PsiQuery::use_symmetry)
      .def_readwrite("workers", &PsiQuery::workers)
      .def_readwrite("limits", &PsiQuery::limits);

  py::class_<PsiResult>(m, "PsiResult")
      .def_readonly("value", &PsiResult::value)
      .def_readonly("status", &PsiResult::status)
      .def_readonly("witness", &PsiResult::witness)
      .def_readonly("cap_counterexample", &PsiResult::cap_counterexample)
      .def_readonly("solvable_checked", &PsiResult::solvable_checked)
      .def_readonly("nodes", &PsiResult::nodes);

  py::register_exception<ResourceLimitError>(m, "ResourceLimitError");

  m.def("family_name", &family_name);
  m.def(
      "parse_family",
      [](const std::string& name) { return parse_family(name); },
      py::arg("name"));
  m.def("generate_family", &generate_family, py::arg("spec"));
  m.def("builtin_assignment", &builtin_assignment, py::arg("spec"));
  m.def("derive_edge_labels", &derive_edge_labels, py::arg("graph"),
        py::arg("assignment"));
  m.def(
      "is_sdc",
      [](const Graph& g, const VertexAssignment& a) {
        return is_sdc(g, a).first;
      },
      py::arg("graph"), py::arg("assignment"));
  m.def("closed_form", &closed_form, py::arg("spec"));
  m.def("is_restricted", &is_restricted, py::arg("dist"), py::arg("labeling"));
  m.def("solve", &solve, py::arg("graph"), py::arg("labeling"), py::arg("dist"),
        py::arg("semantics") = GameSemantics{},
        py::arg("limits") = SolveLimits{});
  m.def(
      "psi_ec",
      [](const Graph& g, const EdgeLabeling& lab, const PsiQuery& q) {
        return psi_ec(g, lab, q);
      },
      py::arg("graph"), py::arg("labeling"), py::arg("query"),
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "restricted_distributions",
      [](const Graph& g, const EdgeLabeling& lab, int total) {
        return restricted_distributions(g, lab, total);
      },
      py::arg("graph"), py::arg("labeling"), py::arg("total"));
  m.def("classic_cover_number", &classic_cover_number, py::arg("graph"),
        py::arg("m_cap"), py::arg("workers") = 1,
        py::arg("limits") = SolveLimits{});

  m.def("load_graph", &load_graph, py::arg("text"));
  m.def("save_graph", &save_graph, py::arg("graph"));
  m.def("load_assignment", &load_assignment, py::arg("text"));
  m.def("save_assignment", &save_assignment, py::arg("assignment"));
  m.def("load_distribution", &load_distribution, py::arg("text"));
  m.def("save_distribution", &save_distribution, py::arg("dist"));
}
