#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mincut/vertex_set.hpp"

namespace mincut {

struct Edge {
  int tail = 0;
  int head = 0;
  uint64_t capacity = 0;
};

// The S-side of an (s,t)-cut restricted to non-terminal vertices. The source
// is an implicit member of S and the sink an implicit member of T. The bitset
// universe is the owning network's vertex count; terminal bits stay clear.
struct Cut {
  VertexSet s_side;

  explicit Cut(int vertex_count = 0) : s_side(vertex_count) {}
  explicit Cut(VertexSet s) : s_side(std::move(s)) {}

  bool contains(int v) const { return s_side.test(v); }
  int size() const { return s_side.count(); }
  bool operator==(const Cut& o) const { return s_side == o.s_side; }
  bool operator!=(const Cut& o) const { return !(*this == o); }
};

// Refinement order: a <= b iff a's S-side is contained in b's.
inline bool cut_leq(const Cut& a, const Cut& b) { return a.s_side.is_subset_of(b.s_side); }
inline bool cut_lt(const Cut& a, const Cut& b) { return cut_leq(a, b) && a != b; }

// Linear extension of the refinement order, used wherever deterministic
// output ordering is needed.
inline bool cut_canonical_less(const Cut& a, const Cut& b) {
  return a.s_side.canonical_less(b.s_side);
}

Cut cut_meet(const Cut& a, const Cut& b);
Cut cut_join(const Cut& a, const Cut& b);

// Immutable capacitated directed graph with designated source and sink.
// Construction merges parallel edges per ordered pair by summing capacities,
// rejects self-loops and out-of-range ids, and rejects capacity totals that
// would overflow 64-bit arithmetic. Antiparallel edges stay distinct.
class FlowNetwork {
 public:
  FlowNetwork(int vertex_count, int source, int sink, const std::vector<Edge>& edges);

  int vertex_count() const { return vertex_count_; }
  int source() const { return source_; }
  int sink() const { return sink_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& out_edges(int v) const { return out_edges_.at(v); }
  const std::vector<int>& in_edges(int v) const { return in_edges_.at(v); }

  // Index of the merged edge u->v, if present.
  std::optional<int> edge_between(int u, int v) const;
  uint64_t capacity_between(int u, int v) const;

  // Sum of all edge capacities (guaranteed not to overflow, checked on build).
  uint64_t total_capacity() const { return total_capacity_; }

  // True when the source has no incoming and the sink no outgoing edges.
  bool is_terminal_form() const { return terminal_form_; }

  bool is_terminal(int v) const { return v == source_ || v == sink_; }
  int non_terminal_count() const { return vertex_count_ - 2; }

  Cut bottom_cut() const { return Cut(vertex_count_); }
  Cut top_cut() const;

  // Throws unless the cut's S-side is a set of this network's non-terminals.
  void check_cut(const Cut& cut) const;

 private:
  int vertex_count_;
  int source_;
  int sink_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_edges_;
  std::vector<std::vector<int>> in_edges_;
  std::unordered_map<uint64_t, int> edge_index_;
  uint64_t total_capacity_ = 0;
  bool terminal_form_ = false;
};

// When the source has an incoming edge or the sink an outgoing one, appends a
// fresh terminal source s' with s'->s and a fresh terminal sink t' with t->t',
// both of capacity (total capacity + 1); otherwise returns the input as is.
// Max-flow value and min-cuts over the original vertices are preserved.
FlowNetwork normalize(const FlowNetwork& raw);

// Sum of capacities of edges from S = {source} ∪ s_side to the complement.
uint64_t cut_capacity(const FlowNetwork& net, const Cut& cut);

}  // namespace mincut
