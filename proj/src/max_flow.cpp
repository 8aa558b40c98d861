#include "mincut/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "mincut/errors.hpp"

namespace mincut {

namespace {

// Paired-arc residual graph: arc 2i is edge i, arc 2i^1 its reverse.
struct Dinic {
  struct Arc {
    int to;
    uint64_t residual;
  };

  const FlowNetwork& net;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj;
  std::vector<int> level;
  std::vector<size_t> next_arc;

  explicit Dinic(const FlowNetwork& n) : net(n), adj(n.vertex_count()), level(n.vertex_count()), next_arc(n.vertex_count()) {
    arcs.reserve(net.edges().size() * 2);
    for (int i = 0; i < net.edge_count(); ++i) {
      const Edge& e = net.edges()[i];
      adj[e.tail].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({e.head, e.capacity});
      adj[e.head].push_back(static_cast<int>(arcs.size()));
      arcs.push_back({e.tail, 0});
    }
  }

  bool bfs() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> queue;
    queue.push(net.source());
    level[net.source()] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int a : adj[v]) {
        if (arcs[a].residual > 0 && level[arcs[a].to] == -1) {
          level[arcs[a].to] = level[v] + 1;
          queue.push(arcs[a].to);
        }
      }
    }
    return level[net.sink()] != -1;
  }

  uint64_t dfs(int v, uint64_t limit) {
    if (v == net.sink()) return limit;
    for (size_t& i = next_arc[v]; i < adj[v].size(); ++i) {
      int a = adj[v][i];
      if (arcs[a].residual == 0 || level[arcs[a].to] != level[v] + 1) continue;
      uint64_t pushed = dfs(arcs[a].to, std::min(limit, arcs[a].residual));
      if (pushed > 0) {
        arcs[a].residual -= pushed;
        arcs[a ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  Flow run() {
    Flow flow;
    flow.per_edge.assign(net.edge_count(), 0);
    while (bfs()) {
      std::fill(next_arc.begin(), next_arc.end(), 0);
      while (uint64_t pushed = dfs(net.source(), std::numeric_limits<uint64_t>::max()))
        flow.value += pushed;
    }
    for (int i = 0; i < net.edge_count(); ++i)
      flow.per_edge[i] = net.edges()[i].capacity - arcs[2 * static_cast<size_t>(i)].residual;
    return flow;
  }
};

}  // namespace

Flow compute_max_flow(const FlowNetwork& net) { return Dinic(net).run(); }

bool is_saturated(const FlowNetwork& net, const Flow& flow, int edge_index) {
  if (edge_index < 0 || edge_index >= net.edge_count() ||
      flow.per_edge.size() != static_cast<size_t>(net.edge_count()))
    throw StructuralError("edge index out of range");
  return flow.per_edge[edge_index] == net.edges()[edge_index].capacity;
}

bool is_positive(const Flow& flow, int edge_index) {
  if (edge_index < 0 || edge_index >= static_cast<int>(flow.per_edge.size()))
    throw StructuralError("edge index out of range");
  return flow.per_edge[edge_index] > 0;
}

void validate_max_flow(const FlowNetwork& net, const Flow& flow) {
  if (flow.per_edge.size() != static_cast<size_t>(net.edge_count()))
    throw ContractViolation("flow does not match network edge count");

  std::vector<int64_t> balance(net.vertex_count(), 0);
  for (int i = 0; i < net.edge_count(); ++i) {
    const Edge& e = net.edges()[i];
    if (flow.per_edge[i] > e.capacity) throw ContractViolation("flow exceeds capacity");
    balance[e.tail] -= static_cast<int64_t>(flow.per_edge[i]);
    balance[e.head] += static_cast<int64_t>(flow.per_edge[i]);
  }
  for (int v = 0; v < net.vertex_count(); ++v) {
    if (net.is_terminal(v)) continue;
    if (balance[v] != 0) throw ContractViolation("flow conservation violated");
  }
  if (balance[net.source()] != -static_cast<int64_t>(flow.value) ||
      balance[net.sink()] != static_cast<int64_t>(flow.value))
    throw ContractViolation("flow value does not match terminal balance");

  // Maximality: the sink must be unreachable in the residual graph.
  std::vector<char> seen(net.vertex_count(), 0);
  std::queue<int> queue;
  queue.push(net.source());
  seen[net.source()] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    auto visit = [&](int w) {
      if (!seen[w]) {
        seen[w] = 1;
        queue.push(w);
      }
    };
    for (int i : net.out_edges(v))
      if (flow.per_edge[i] < net.edges()[i].capacity) visit(net.edges()[i].head);
    for (int i : net.in_edges(v))
      if (flow.per_edge[i] > 0) visit(net.edges()[i].tail);
  }
  if (seen[net.sink()]) throw ContractViolation("flow is not maximum (augmenting path exists)");
}

}  // namespace mincut
