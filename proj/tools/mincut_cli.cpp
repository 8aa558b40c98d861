#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mincut/enumeration.hpp"
#include "mincut/errors.hpp"
#include "mincut/graph_io.hpp"
#include "mincut/llp_solver.hpp"
#include "mincut/slicing.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitInputError = 2;

using namespace mincut;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_ids(std::ostream& out, const std::vector<int>& ids) {
  for (size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
}

// Lattice-linear predicate from an optional file; constant-true without one.
PredicatePtr load_lattice_linear(const LoadedGraph& g, const std::string& path) {
  if (path.empty()) return constant_true(g.net);
  ParsedPredicates parsed = parse_predicates_json(read_file(path), g);
  if (!parsed.lattice_linear)
    throw StructuralError("general expression predicate requires the slice command");
  return parsed.lattice_linear;
}

int cmd_maxflow(const std::string& graph_path) {
  LoadedGraph g = load_graph_file(graph_path);
  Flow flow = compute_max_flow(g.net);
  std::cout << "value " << flow.value << '\n';
  for (int i = 0; i < g.raw.edge_count(); ++i) {
    const Edge& e = g.raw.edges()[i];
    std::cout << "flow " << e.tail + 1 << ' ' << e.head + 1 << ' ' << flow.per_edge[i] << '\n';
  }
  return kExitFound;
}

int cmd_solve(const std::string& graph_path, const std::string& predicates_path) {
  LoadedGraph g = load_graph_file(graph_path);
  PredicatePtr predicate = load_lattice_linear(g, predicates_path);
  Flow flow = compute_max_flow(g.net);
  SolveTrace trace = least_sat_min_cut(g.net, flow, *predicate);
  if (!trace.found()) {
    std::cout << "INFEASIBLE\n";
    return kExitInfeasible;
  }
  std::cout << "S: ";
  print_ids(std::cout, cut_file_ids(g, *trace.cut));
  std::cout << '\n';
  std::cout << "capacity: " << cut_capacity(g.net, *trace.cut) << '\n';
  std::cout << "rounds: " << trace.rounds << '\n';
  return kExitFound;
}

int cmd_irreducibles(const std::string& graph_path, const std::string& predicates_path) {
  LoadedGraph g = load_graph_file(graph_path);
  PredicatePtr predicate = load_lattice_linear(g, predicates_path);
  Flow flow = compute_max_flow(g.net);
  auto poset = compute_irreducibles(g.net, flow, predicate);
  if (!poset) {
    std::cout << "INFEASIBLE\n";
    return kExitInfeasible;
  }
  std::cout << "bottom: ";
  print_ids(std::cout, cut_file_ids(g, poset->bottom));
  std::cout << '\n';
  for (const Cut& cut : poset->elements) {
    std::cout << "irr: ";
    print_ids(std::cout, cut_file_ids(g, cut));
    std::cout << '\n';
  }
  std::cout << "count " << poset->elements.size() << '\n';
  return kExitFound;
}

int cmd_enumerate(const std::string& graph_path, const std::string& predicates_path,
                  std::optional<uint64_t> limit, const std::string& format) {
  LoadedGraph g = load_graph_file(graph_path);
  PredicatePtr predicate = load_lattice_linear(g, predicates_path);
  Flow flow = compute_max_flow(g.net);
  bool json = format == "json";
  bool first = true;
  if (json) std::cout << "{\"cuts\":[";
  uint64_t count = enumerate_min_cuts(g.net, flow, predicate, [&](const Cut& cut) {
    std::vector<int> ids = cut_file_ids(g, cut);
    if (json) {
      if (!first) std::cout << ',';
      std::cout << '[';
      for (size_t i = 0; i < ids.size(); ++i) std::cout << (i ? "," : "") << ids[i];
      std::cout << ']';
      first = false;
    } else {
      std::cout << "cut: ";
      print_ids(std::cout, ids);
      std::cout << '\n';
    }
    return true;
  }, limit);
  if (json)
    std::cout << "],\"count\":" << count << "}\n";
  else
    std::cout << "count " << count << '\n';
  return kExitFound;
}

int cmd_slice(const std::string& graph_path, const std::string& regular_path,
              const std::string& general_path) {
  LoadedGraph g = load_graph_file(graph_path);
  PredicatePtr regular = load_lattice_linear(g, regular_path);
  ParsedPredicates general = parse_predicates_json(read_file(general_path), g);
  if (!general.general)
    throw StructuralError("the --general file must hold a boolean expression");
  Flow flow = compute_max_flow(g.net);
  ExpressionPtr expr = general.general;
  SliceResult result = slice_search(g.net, flow, regular,
                                    [&](const Cut& cut) { return expr->evaluate(cut); });
  if (!result.found()) {
    std::cout << "NOT FOUND\n";
    std::cout << "examined: " << result.examined << '\n';
    return kExitInfeasible;
  }
  std::cout << "S: ";
  print_ids(std::cout, cut_file_ids(g, *result.cut));
  std::cout << '\n';
  std::cout << "capacity: " << cut_capacity(g.net, *result.cut) << '\n';
  std::cout << "examined: " << result.examined << '\n';
  return kExitFound;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained min-cuts over the lattice of (s,t)-cuts"};
  app.require_subcommand(1);

  std::string graph_path, predicates_path, regular_path, general_path;
  std::string format = "text";
  uint64_t limit_value = 0;

  auto* maxflow = app.add_subcommand("maxflow", "Compute a maximum flow");
  maxflow->add_option("graph", graph_path, "graph file")->required();

  auto* solve = app.add_subcommand("solve", "Least min-cut satisfying lattice-linear predicates");
  solve->add_option("graph", graph_path, "graph file")->required();
  solve->add_option("--predicates", predicates_path, "predicate JSON file");

  auto* irr = app.add_subcommand("irreducibles", "Irreducible min-cuts under a regular predicate");
  irr->add_option("graph", graph_path, "graph file")->required();
  irr->add_option("--predicates", predicates_path, "predicate JSON file");

  auto* enumerate = app.add_subcommand("enumerate", "List min-cuts satisfying a regular predicate");
  enumerate->add_option("graph", graph_path, "graph file")->required();
  enumerate->add_option("--predicates", predicates_path, "predicate JSON file");
  auto* limit_opt = enumerate->add_option("--limit", limit_value, "stop after this many cuts");
  enumerate->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* slice = app.add_subcommand("slice", "First cut of a regular slice satisfying a general predicate");
  slice->add_option("graph", graph_path, "graph file")->required();
  slice->add_option("--regular", regular_path, "regular predicate JSON file");
  slice->add_option("--general", general_path, "general expression JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (maxflow->parsed()) return cmd_maxflow(graph_path);
    if (solve->parsed()) return cmd_solve(graph_path, predicates_path);
    if (irr->parsed()) return cmd_irreducibles(graph_path, predicates_path);
    if (enumerate->parsed()) {
      std::optional<uint64_t> limit;
      if (limit_opt->count() > 0) limit = limit_value;
      return cmd_enumerate(graph_path, predicates_path, limit, format);
    }
    if (slice->parsed()) return cmd_slice(graph_path, regular_path, general_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}
