#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mincut/errors.hpp"
#include "mincut/max_flow.hpp"
#include "test_util.hpp"

using namespace mincut;
using namespace mincut::testutil;

namespace {

uint64_t oracle_min_capacity(const FlowNetwork& net) {
  uint64_t best = UINT64_MAX;
  for (const Cut& c : oracle::all_cuts(net)) best = std::min(best, oracle::naive_cut_capacity(net, c));
  return best;
}

}  // namespace

TEST_CASE("max-flow values on the named gadgets") {
  CHECK(compute_max_flow(fixtures::fan(3)).value == 3);
  CHECK(compute_max_flow(fixtures::two_route_fan(2)).value == 2);

  FlowNetwork zero(3, 0, 2, {{0, 1, 0}, {1, 2, 0}});
  CHECK(compute_max_flow(zero).value == 0);
}

TEST_CASE("max-flow equals the minimum cut capacity on every fixture") {
  for (const auto& fixture : fixtures::standard_fixtures()) {
    Flow flow = compute_max_flow(fixture.net);
    if (fixture.max_flow_value) CHECK(flow.value == *fixture.max_flow_value);
    if (fixture.net.non_terminal_count() <= 14)
      CHECK(flow.value == oracle_min_capacity(fixture.net));
  }
}

TEST_CASE("flows satisfy capacity and conservation everywhere") {
  for (const auto& fixture : fixtures::standard_fixtures()) {
    const FlowNetwork& net = fixture.net;
    Flow flow = compute_max_flow(net);
    CHECK_NOTHROW(validate_max_flow(net, flow));
    std::vector<int64_t> balance(net.vertex_count(), 0);
    for (int i = 0; i < net.edge_count(); ++i) {
      CHECK(flow.per_edge[i] <= net.edges()[i].capacity);
      balance[net.edges()[i].tail] -= static_cast<int64_t>(flow.per_edge[i]);
      balance[net.edges()[i].head] += static_cast<int64_t>(flow.per_edge[i]);
    }
    for (int v = 0; v < net.vertex_count(); ++v)
      if (!net.is_terminal(v)) CHECK(balance[v] == 0);
    CHECK(balance[net.sink()] == static_cast<int64_t>(flow.value));
  }
}

TEST_CASE("determinism: identical per-edge flows across runs") {
  for (const auto& fixture : fixtures::standard_fixtures()) {
    Flow a = compute_max_flow(fixture.net);
    Flow b = compute_max_flow(fixture.net);
    CHECK(a.value == b.value);
    CHECK(a.per_edge == b.per_edge);
  }
}

TEST_CASE("golden per-edge flows on the demo network") {
  // Frozen from the deterministic augmentation order; the value itself is
  // oracle-checked above.
  FlowNetwork net = fixtures::demo_network();
  Flow flow = compute_max_flow(net);
  CHECK(flow.value == 3);
  // Edges: s->a, s->b, s->c, b->a, a->d, b->d, c->e, d->t, e->t
  CHECK(flow.per_edge == std::vector<uint64_t>{2, 0, 1, 0, 2, 0, 1, 2, 1});
}

TEST_CASE("saturation and positivity accessors") {
  FlowNetwork net(3, 0, 2, {{0, 1, 3}, {1, 2, 3}, {0, 2, 0}});
  Flow flow = compute_max_flow(net);
  int first = 0;
  CHECK(is_saturated(net, flow, first));
  CHECK(is_positive(flow, first));
  int zero_cap = 2;
  CHECK(is_saturated(net, flow, zero_cap));   // cap 0, flow 0
  CHECK_FALSE(is_positive(flow, zero_cap));

  Flow empty;
  empty.per_edge.assign(3, 0);
  CHECK_FALSE(is_positive(empty, 0));
  CHECK_THROWS_AS(is_positive(empty, 9), StructuralError);
}

TEST_CASE("validate_max_flow rejects tampered flows") {
  FlowNetwork net = fixtures::fan(2);
  Flow flow = compute_max_flow(net);

  Flow short_flow = flow;
  short_flow.per_edge[0] = 0;  // breaks conservation at u1
  CHECK_THROWS_AS(validate_max_flow(net, short_flow), ContractViolation);

  Flow not_max = flow;
  for (auto& f : not_max.per_edge) f = 0;
  not_max.value = 0;
  CHECK_THROWS_AS(validate_max_flow(net, not_max), ContractViolation);

  Flow over = flow;
  over.per_edge[0] = 99;
  CHECK_THROWS_AS(validate_max_flow(net, over), ContractViolation);
}
