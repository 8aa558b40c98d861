#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mincut/enumeration.hpp"
#include "mincut/graph_io.hpp"
#include "mincut/llp_solver.hpp"
#include "mincut/slicing.hpp"

namespace py = pybind11;
using namespace mincut;

namespace {

// A loaded graph plus its max-flow, shared by every query. Results report
// vertex ids in the same id space the network was built with: 1-based for
// the text format, 0-based for the edge-list constructor.
struct Session {
  LoadedGraph graph;
  Flow flow;
  bool one_based_ids;

  Session(LoadedGraph g, bool one_based)
      : graph(std::move(g)), flow(compute_max_flow(graph.net)), one_based_ids(one_based) {}

  std::vector<int> ids(const Cut& cut) const {
    std::vector<int> out = cut_file_ids(graph, cut);
    if (!one_based_ids)
      for (int& v : out) --v;
    return out;
  }

  PredicatePtr lattice_linear(const std::string& json_text) const {
    if (json_text.empty()) return constant_true(graph.net);
    ParsedPredicates parsed = parse_predicates_json(json_text, graph, one_based_ids ? 1 : 0);
    if (!parsed.lattice_linear)
      throw StructuralError("expected an array of lattice-linear predicates");
    return parsed.lattice_linear;
  }

  ExpressionPtr expression(const std::string& json_text) const {
    ParsedPredicates parsed = parse_predicates_json(json_text, graph, one_based_ids ? 1 : 0);
    if (!parsed.general) throw StructuralError("expected a boolean expression object");
    return parsed.general;
  }
};

Session session_from_edges(int vertex_count, int source, int sink,
                           const std::vector<std::tuple<int, int, uint64_t>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [tail, head, capacity] : edges) list.push_back({tail, head, capacity});
  FlowNetwork raw(vertex_count, source, sink, list);
  FlowNetwork net = normalize(raw);
  return Session(LoadedGraph{std::move(raw), std::move(net)}, /*one_based=*/false);
}

Session session_from_text(const std::string& text) {
  return Session(load_graph_text(text), /*one_based=*/true);
}

py::dict trace_to_dict(const Session& s, const SolveTrace& trace) {
  py::dict out;
  out["feasible"] = trace.found();
  out["rounds"] = trace.rounds;
  out["transitions_observed"] = trace.transitions_observed;
  if (trace.found()) {
    out["s_side"] = s.ids(*trace.cut);
    out["capacity"] = cut_capacity(s.graph.net, *trace.cut);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Min-cuts under lattice-linear constraints: flows, irreducibles, enumeration";

  py::register_exception<StructuralError>(m, "StructuralError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_RuntimeError);

  py::class_<Session>(m, "Network")
      .def(py::init(&session_from_edges), py::arg("vertex_count"), py::arg("source"),
           py::arg("sink"), py::arg("edges"),
           "Build from 0-based vertex ids and (tail, head, capacity) edges.")
      .def_static("from_text", &session_from_text, py::arg("text"),
                  "Parse the 'p max / n / a' text format (1-based ids).")
      .def_property_readonly("max_flow_value", [](const Session& s) { return s.flow.value; })
      .def_property_readonly("vertex_count",
                             [](const Session& s) { return s.graph.raw.vertex_count(); })
      .def("edge_flows",
           [](const Session& s) {
             std::vector<std::tuple<int, int, uint64_t>> out;
             int shift = s.one_based_ids ? 1 : 0;
             for (int i = 0; i < s.graph.raw.edge_count(); ++i) {
               const Edge& e = s.graph.raw.edges()[i];
               out.emplace_back(e.tail + shift, e.head + shift, s.flow.per_edge[i]);
             }
             return out;
           },
           "Per-edge flows of the deterministic max-flow, in input order.")
      .def("solve",
           [](const Session& s, const std::string& predicates) {
             return trace_to_dict(
                 s, least_sat_min_cut(s.graph.net, s.flow, *s.lattice_linear(predicates)));
           },
           py::arg("predicates") = std::string(),
           "Least min-cut satisfying the lattice-linear predicates (JSON array).")
      .def("irreducibles",
           [](const Session& s, const std::string& predicates) {
             py::dict out;
             auto poset = compute_irreducibles(s.graph.net, s.flow, s.lattice_linear(predicates));
             out["feasible"] = poset.has_value();
             if (poset) {
               out["bottom"] = s.ids(poset->bottom);
               std::vector<std::vector<int>> elements;
               for (const Cut& c : poset->elements) elements.push_back(s.ids(c));
               out["elements"] = elements;
             }
             return out;
           },
           py::arg("predicates") = std::string())
      .def("enumerate",
           [](const Session& s, const std::string& predicates, std::optional<uint64_t> limit) {
             std::vector<std::vector<int>> cuts;
             enumerate_min_cuts(s.graph.net, s.flow, s.lattice_linear(predicates),
                                [&](const Cut& c) {
                                  cuts.push_back(s.ids(c));
                                  return true;
                                },
                                limit);
             return cuts;
           },
           py::arg("predicates") = std::string(), py::arg("limit") = py::none(),
           "All min-cuts satisfying the regular predicates, each exactly once.")
      .def("slice",
           [](const Session& s, const std::string& general, const std::string& regular) {
             ExpressionPtr expr = s.expression(general);
             SliceResult result = slice_search(s.graph.net, s.flow, s.lattice_linear(regular),
                                               [&](const Cut& c) { return expr->evaluate(c); });
             py::dict out;
             out["found"] = result.found();
             out["examined"] = result.examined;
             if (result.found()) {
               out["s_side"] = s.ids(*result.cut);
               out["capacity"] = cut_capacity(s.graph.net, *result.cut);
             }
             return out;
           },
           py::arg("general"), py::arg("regular") = std::string(),
           "First enumerated cut of the regular slice satisfying the expression.");
}
