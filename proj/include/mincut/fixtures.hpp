#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mincut/flow_network.hpp"

namespace mincut::fixtures {

// Named test network with optional precomputed answers.
struct Fixture {
  std::string name;
  FlowNetwork net;
  std::optional<uint64_t> max_flow_value;
  std::optional<uint64_t> min_cut_count;
  std::optional<int> irreducible_count;
};

// k disjoint two-edge unit paths s->u_i->t. Every subset of {u_i} is a
// min-cut: 2^k min-cuts, k irreducibles, max-flow k.
FlowNetwork fan(int k);
// Vertex u_i of the fan.
int fan_vertex(int i);

// k units, each with two parallel two-hop routes s->a_i->c_i->t and
// s->b_i->c_i->t, all capacities 1. Unique min-cut (everything on the S-side)
// and 2^k integral max-flows.
FlowNetwork two_route_fan(int k);
int two_route_a(int i);
int two_route_b(int i);
int two_route_c(int i);

// Path s->v_1->...->v_k->t with unit capacities. k+1 min-cuts forming a
// chain; k irreducibles.
FlowNetwork unit_path(int k);
// Same shape with the given capacities (edges.size() == k+1).
FlowNetwork path_with_capacities(const std::vector<uint64_t>& caps);
int path_vertex(int i);

// Hand-sized 7-vertex example with a nontrivial min-cut lattice.
FlowNetwork demo_network();

// Random layered graph: `layer_sizes.size()` layers of non-terminals, full
// bipartite edges between consecutive layers (and from s / to t) with
// capacities uniform in [1, max_cap]. Deterministic in the seed.
FlowNetwork layered_random(const std::vector<int>& layer_sizes, uint64_t seed,
                           uint64_t max_cap = 10);
// Convenience: n non-terminals split over `layers` layers as evenly as possible.
FlowNetwork layered_random(int n, int layers, uint64_t seed, uint64_t max_cap = 10);

// Strict chain of cuts X_1 <= ... <= X_k over unit_path(k) whose uniformly
// directed status alternates with the index: exactly k-1 truth flips.
std::vector<Cut> alternating_prefix_chain(const FlowNetwork& path_net);

// The standard fixture set shared by property suites: fans (k=1..4),
// two-route fans (k=1..3), unit paths, the demo network, and seeded layered
// graphs, all within the oracle's exhaustion budget.
std::vector<Fixture> standard_fixtures();

}  // namespace mincut::fixtures
