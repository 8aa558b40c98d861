#include "mincut/flow_network.hpp"

#include <limits>

#include "mincut/errors.hpp"

namespace mincut {

namespace {

uint64_t pair_key(int u, int v) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

uint64_t checked_add(uint64_t a, uint64_t b) {
  if (a > std::numeric_limits<uint64_t>::max() - b)
    throw StructuralError("capacity sum overflows 64-bit arithmetic");
  return a + b;
}

}  // namespace

FlowNetwork::FlowNetwork(int vertex_count, int source, int sink, const std::vector<Edge>& edges)
    : vertex_count_(vertex_count), source_(source), sink_(sink) {
  if (vertex_count_ < 2) throw StructuralError("a flow network needs at least source and sink");
  auto in_range = [&](int v) { return v >= 0 && v < vertex_count_; };
  if (!in_range(source_) || !in_range(sink_)) throw StructuralError("terminal id out of range");
  if (source_ == sink_) throw StructuralError("source and sink must differ");

  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (!in_range(e.tail) || !in_range(e.head)) throw StructuralError("edge endpoint out of range");
    if (e.tail == e.head) throw StructuralError("self-loops are not allowed");
    uint64_t key = pair_key(e.tail, e.head);
    auto it = edge_index_.find(key);
    if (it == edge_index_.end()) {
      edge_index_.emplace(key, static_cast<int>(edges_.size()));
      edges_.push_back(e);
    } else {
      edges_[it->second].capacity = checked_add(edges_[it->second].capacity, e.capacity);
    }
  }

  for (const Edge& e : edges_) total_capacity_ = checked_add(total_capacity_, e.capacity);
  // Room for the two synthetic terminal edges normalize() may append.
  checked_add(checked_add(total_capacity_, total_capacity_), 2);

  out_edges_.resize(vertex_count_);
  in_edges_.resize(vertex_count_);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    out_edges_[edges_[i].tail].push_back(i);
    in_edges_[edges_[i].head].push_back(i);
  }
  terminal_form_ = in_edges_[source_].empty() && out_edges_[sink_].empty();
}

std::optional<int> FlowNetwork::edge_between(int u, int v) const {
  auto it = edge_index_.find(pair_key(u, v));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

uint64_t FlowNetwork::capacity_between(int u, int v) const {
  auto idx = edge_between(u, v);
  return idx ? edges_[*idx].capacity : 0;
}

Cut FlowNetwork::top_cut() const {
  Cut c(vertex_count_);
  for (int v = 0; v < vertex_count_; ++v)
    if (!is_terminal(v)) c.s_side.set(v);
  return c;
}

void FlowNetwork::check_cut(const Cut& cut) const {
  if (cut.s_side.universe() != vertex_count_)
    throw StructuralError("cut does not match network dimensions");
  if (cut.s_side.test(source_) || cut.s_side.test(sink_))
    throw StructuralError("cut S-side must contain non-terminals only");
}

FlowNetwork normalize(const FlowNetwork& raw) {
  if (raw.is_terminal_form()) return raw;
  int n = raw.vertex_count();
  int fresh_source = n;
  int fresh_sink = n + 1;
  uint64_t terminal_cap = raw.total_capacity() + 1;
  std::vector<Edge> edges = raw.edges();
  edges.push_back({fresh_source, raw.source(), terminal_cap});
  edges.push_back({raw.sink(), fresh_sink, terminal_cap});
  return FlowNetwork(n + 2, fresh_source, fresh_sink, edges);
}

uint64_t cut_capacity(const FlowNetwork& net, const Cut& cut) {
  net.check_cut(cut);
  uint64_t total = 0;
  for (const Edge& e : net.edges()) {
    bool tail_in_s = e.tail == net.source() || cut.contains(e.tail);
    bool head_in_s = e.head == net.source() || cut.contains(e.head);
    if (tail_in_s && !head_in_s) total += e.capacity;
  }
  return total;
}

Cut cut_meet(const Cut& a, const Cut& b) { return Cut(a.s_side & b.s_side); }

Cut cut_join(const Cut& a, const Cut& b) { return Cut(a.s_side | b.s_side); }

}  // namespace mincut
