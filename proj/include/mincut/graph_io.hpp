#pragma once

#include <istream>
#include <string>
#include <vector>

#include "mincut/predicates.hpp"

namespace mincut {

// Text format, one directive per line:
//   c <comment>
//   p max <n> <m>      problem line: n vertices (1-based ids), m arcs
//   n <id> s           exactly one source line
//   n <id> t           exactly one sink line
//   a <tail> <head> <capacity>
// Internal vertex v corresponds to file id v+1.
FlowNetwork parse_graph(std::istream& in);
FlowNetwork parse_graph_text(const std::string& text);

std::string print_graph(const FlowNetwork& net);

// A graph file together with its normalized working form.
struct LoadedGraph {
  FlowNetwork raw;
  FlowNetwork net;  // normalize(raw)
  int file_vertex_count() const { return raw.vertex_count(); }
};

LoadedGraph load_graph_file(const std::string& path);
LoadedGraph load_graph_text(const std::string& text);

// File ids (1-based, original vertices only) of the cut's S-side including
// the source, sorted ascending. Synthetic terminals are never reported.
std::vector<int> cut_file_ids(const LoadedGraph& g, const Cut& cut);

// Predicate file: either an array of lattice-linear constraint objects
//   {"type":"implication","if":[ids],"then":id}
//   {"type":"require_source","vertex":id}
//   {"type":"forbid_source","vertex":id}
//   {"type":"uniformly_directed"}
// or a single general boolean expression
//   {"op":"and"|"or"|"not","args":[...]}
//   {"atom":"in_s","vertex":id} | {"atom":"card_le","k":int} | {"atom":"card_ge","k":int}
// Vertex ids are the graph file's 1-based ids and must be non-terminals of
// the original graph. Exactly one of the two members is set; an empty array
// yields the constant-true predicate.
struct ParsedPredicates {
  PredicatePtr lattice_linear;
  ExpressionPtr general;
};

// id_base selects the external id convention: 1 for graph files (default),
// 0 for callers addressing vertices directly.
ParsedPredicates parse_predicates_json(const std::string& text, const LoadedGraph& g,
                                       int id_base = 1);

}  // namespace mincut
