#pragma once

#include <cstdint>
#include <vector>

#include "mincut/flow_network.hpp"

namespace mincut {

// Integral flow assignment, indexed like net.edges().
struct Flow {
  std::vector<uint64_t> per_edge;
  uint64_t value = 0;
};

// Dinic's algorithm (level graph + blocking flow). Deterministic: edges are
// scanned in input index order, so per-edge flows are stable across runs.
Flow compute_max_flow(const FlowNetwork& net);

bool is_saturated(const FlowNetwork& net, const Flow& flow, int edge_index);
bool is_positive(const Flow& flow, int edge_index);

// Checks capacity bounds, conservation at non-terminals, the value accounting,
// and maximality (no residual augmenting path). Throws ContractViolation.
void validate_max_flow(const FlowNetwork& net, const Flow& flow);

}  // namespace mincut
