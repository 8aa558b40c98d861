#include "mincut/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mincut/errors.hpp"

namespace mincut {

namespace {

using nlohmann::json;

[[noreturn]] void fail_line(int line, const std::string& message) {
  throw StructuralError("line " + std::to_string(line) + ": " + message);
}

}  // namespace

FlowNetwork parse_graph(std::istream& in) {
  int n = -1;
  long long declared_arcs = -1;
  int source = -1, sink = -1;
  std::vector<Edge> edges;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n != -1) fail_line(line_no, "duplicate problem line");
      std::string kind;
      long long count = 0;
      if (!(ls >> kind >> count >> declared_arcs) || kind != "max")
        fail_line(line_no, "expected 'p max <n> <m>'");
      if (count < 2) fail_line(line_no, "vertex count must be at least 2");
      n = static_cast<int>(count);
    } else if (tag == "n") {
      if (n == -1) fail_line(line_no, "node line before problem line");
      long long id = 0;
      std::string role;
      if (!(ls >> id >> role)) fail_line(line_no, "expected 'n <id> s|t'");
      if (id < 1 || id > n) fail_line(line_no, "node id out of range");
      if (role == "s") {
        if (source != -1) fail_line(line_no, "duplicate source line");
        source = static_cast<int>(id - 1);
      } else if (role == "t") {
        if (sink != -1) fail_line(line_no, "duplicate sink line");
        sink = static_cast<int>(id - 1);
      } else {
        fail_line(line_no, "node role must be 's' or 't'");
      }
    } else if (tag == "a") {
      if (n == -1) fail_line(line_no, "arc line before problem line");
      long long tail = 0, head = 0;
      unsigned long long capacity = 0;
      if (!(ls >> tail >> head >> capacity)) fail_line(line_no, "expected 'a <tail> <head> <cap>'");
      if (tail < 1 || tail > n || head < 1 || head > n)
        fail_line(line_no, "arc endpoint out of range");
      edges.push_back({static_cast<int>(tail - 1), static_cast<int>(head - 1), capacity});
    } else {
      fail_line(line_no, "unknown directive '" + tag + "'");
    }
  }
  if (n == -1) throw StructuralError("missing problem line");
  if (source == -1) throw StructuralError("missing source line");
  if (sink == -1) throw StructuralError("missing sink line");
  if (declared_arcs != static_cast<long long>(edges.size()))
    throw StructuralError("arc count does not match the problem line");
  return FlowNetwork(n, source, sink, edges);
}

FlowNetwork parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string print_graph(const FlowNetwork& net) {
  std::ostringstream out;
  out << "p max " << net.vertex_count() << ' ' << net.edge_count() << '\n';
  out << "n " << net.source() + 1 << " s\n";
  out << "n " << net.sink() + 1 << " t\n";
  for (const Edge& e : net.edges())
    out << "a " << e.tail + 1 << ' ' << e.head + 1 << ' ' << e.capacity << '\n';
  return out.str();
}

LoadedGraph load_graph_text(const std::string& text) {
  FlowNetwork raw = parse_graph_text(text);
  FlowNetwork net = normalize(raw);
  return {std::move(raw), std::move(net)};
}

LoadedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot open graph file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_graph_text(buffer.str());
}

std::vector<int> cut_file_ids(const LoadedGraph& g, const Cut& cut) {
  std::set<int> ids;
  ids.insert(g.raw.source() + 1);
  cut.s_side.for_each([&](int v) {
    if (v < g.file_vertex_count()) ids.insert(v + 1);
  });
  return {ids.begin(), ids.end()};
}

namespace {

// External id -> internal id, restricted to non-terminals of the original graph.
int vertex_from_json(const json& value, const LoadedGraph& g, int id_base) {
  if (!value.is_number_integer()) throw StructuralError("predicate vertex must be an integer id");
  long long id = value.get<long long>();
  if (id < id_base || id >= g.file_vertex_count() + id_base)
    throw StructuralError("predicate vertex id out of range");
  int v = static_cast<int>(id - id_base);
  if (v == g.raw.source() || v == g.raw.sink())
    throw StructuralError("predicate vertex must be a non-terminal");
  return v;
}

PredicatePtr lattice_linear_from_json(const json& obj, const LoadedGraph& g, int id_base) {
  if (!obj.is_object() || !obj.contains("type"))
    throw StructuralError("each predicate must be an object with a 'type' field");
  std::string type = obj.at("type").get<std::string>();
  if (type == "implication") {
    VertexSet premise(g.net.vertex_count());
    for (const json& v : obj.at("if")) premise.set(vertex_from_json(v, g, id_base));
    return implicational(g.net, premise, vertex_from_json(obj.at("then"), g, id_base));
  }
  if (type == "require_source")
    return require_source(g.net, vertex_from_json(obj.at("vertex"), g, id_base));
  if (type == "forbid_source")
    return forbid_source_side(g.net, vertex_from_json(obj.at("vertex"), g, id_base));
  if (type == "uniformly_directed") return uniformly_directed(g.net);
  throw StructuralError("unknown predicate type '" + type + "'");
}

ExpressionPtr expression_from_json(const json& obj, const LoadedGraph& g, int id_base) {
  if (!obj.is_object()) throw StructuralError("expression nodes must be objects");
  if (obj.contains("atom")) {
    std::string atom = obj.at("atom").get<std::string>();
    if (atom == "in_s") return expr_in_s(g.net, vertex_from_json(obj.at("vertex"), g, id_base));
    if (atom == "card_le") return expr_card_le(obj.at("k").get<int>());
    if (atom == "card_ge") return expr_card_ge(obj.at("k").get<int>());
    throw StructuralError("unknown atom '" + atom + "'");
  }
  if (obj.contains("op")) {
    std::string op = obj.at("op").get<std::string>();
    std::vector<ExpressionPtr> args;
    for (const json& a : obj.at("args")) args.push_back(expression_from_json(a, g, id_base));
    if (op == "and") return expr_and(std::move(args));
    if (op == "or") return expr_or(std::move(args));
    if (op == "not") {
      if (args.size() != 1) throw StructuralError("'not' takes exactly one argument");
      return expr_not(std::move(args.front()));
    }
    throw StructuralError("unknown operator '" + op + "'");
  }
  throw StructuralError("expression node needs an 'op' or 'atom' field");
}

}  // namespace

ParsedPredicates parse_predicates_json(const std::string& text, const LoadedGraph& g,
                                       int id_base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw StructuralError(std::string("predicate file is not valid JSON: ") + e.what());
  }
  ParsedPredicates out;
  if (doc.is_array()) {
    std::vector<PredicatePtr> conjuncts;
    for (const json& obj : doc) conjuncts.push_back(lattice_linear_from_json(obj, g, id_base));
    out.lattice_linear =
        conjuncts.empty() ? constant_true(g.net) : conjunction(g.net, std::move(conjuncts));
    return out;
  }
  if (doc.is_object()) {
    out.general = expression_from_json(doc, g, id_base);
    return out;
  }
  throw StructuralError("predicate file must hold an array or an expression object");
}

}  // namespace mincut
