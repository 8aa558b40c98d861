// Acceptance suite: one line per criterion, PASS/FAIL, nonzero exit on any
// failure. Everything checks against the exhaustive oracle at desk scale.

#include <algorithm>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mincut/enumeration.hpp"
#include "mincut/llp_solver.hpp"
#include "mincut/slicing.hpp"
#include "test_util.hpp"

using namespace mincut;
using namespace mincut::testutil;

namespace {

struct Acceptance {
  int failures = 0;

  template <class Body>
  void criterion(int number, const std::string& label, Body&& body) {
    bool ok = false;
    std::string note;
    try {
      ok = body();
    } catch (const std::exception& e) {
      note = std::string(" [exception: ") + e.what() + "]";
    }
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
                note.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
};

std::vector<FlowNetwork> acceptance_networks() {
  std::vector<FlowNetwork> nets;
  for (const auto& fixture : fixtures::standard_fixtures())
    if (fixture.net.non_terminal_count() <= 12) nets.push_back(fixture.net);
  const std::vector<std::vector<int>> shapes = {
      {2, 2, 2}, {3, 3}, {2, 3, 2}, {4, 4}, {3, 3, 3}, {2, 2, 2, 2}, {5, 5},
      {4, 4, 4}, {3, 4, 3}, {6, 6}, {2, 4, 2}, {3, 2, 3}, {4, 3, 4}, {5, 4},
      {2, 5, 2}, {3, 5, 3}, {4, 2, 4}, {6, 5}, {2, 2, 3, 2}, {5, 2, 5},
  };
  for (size_t i = 0; i < shapes.size(); ++i)
    nets.push_back(fixtures::layered_random(shapes[i], 100 + i, 10));
  return nets;
}

ExpressionPtr random_expression(const FlowNetwork& net, std::mt19937_64& rng, int depth) {
  std::vector<int> verts;
  for (int v = 0; v < net.vertex_count(); ++v)
    if (!net.is_terminal(v)) verts.push_back(v);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<size_t> pick(0, verts.size() - 1);
  std::uniform_int_distribution<int> k(0, net.non_terminal_count());
  if (depth == 0) {
    switch (kind(rng)) {
      case 0: return expr_in_s(net, verts[pick(rng)]);
      case 1: return expr_card_le(k(rng));
      default: return expr_card_ge(k(rng));
    }
  }
  switch (kind(rng)) {
    case 0: return expr_and({random_expression(net, rng, depth - 1),
                             random_expression(net, rng, depth - 1)});
    case 1: return expr_or({random_expression(net, rng, depth - 1),
                            random_expression(net, rng, depth - 1)});
    default: return expr_not(random_expression(net, rng, depth - 1));
  }
}

bool forbidden_min_cut_equivalence() {
  for (const FlowNetwork& net : acceptance_networks()) {
    Flow flow = compute_max_flow(net);
    for (const Cut& cut : oracle::all_cuts(net)) {
      bool is_min = oracle::naive_cut_capacity(net, cut) == flow.value;
      if (min_cut_forbidden(net, flow, cut).empty() != is_min) return false;
    }
  }
  return true;
}

bool sublattice_closure() {
  for (const FlowNetwork& net : acceptance_networks()) {
    std::vector<Cut> min_cuts = oracle::all_min_cuts(net);
    if (!oracle::sublattice_closed(min_cuts)) return false;
    PredicatePtr ud = uniformly_directed(net);
    if (!oracle::sublattice_closed(oracle::filter_cuts(min_cuts, eval_fn(ud)))) return false;
  }
  return true;
}

std::vector<PredicatePtr> mixed_predicates(const FlowNetwork& net, std::mt19937_64& rng) {
  std::vector<PredicatePtr> out{constant_true(net), uniformly_directed(net)};
  for (int v = 0; v < net.vertex_count(); ++v)
    if (!net.is_terminal(v)) {
      out.push_back(require_source(net, v));
      out.push_back(forbid_source_side(net, v));
    }
  for (int j = 1; j <= 3; ++j) out.push_back(random_implicational_conjunction(net, j, rng));
  return out;
}

bool least_ness() {
  std::mt19937_64 rng(601);
  for (const FlowNetwork& net : acceptance_networks()) {
    Flow flow = compute_max_flow(net);
    for (const PredicatePtr& B : mixed_predicates(net, rng)) {
      std::vector<Cut> slice = oracle_slice(net, B);
      auto expected = oracle::least_of(slice);
      SolveTrace trace = least_sat_min_cut(net, flow, *B);
      if (trace.found() != !slice.empty()) return false;
      if (trace.found() && (!expected || !(*trace.cut == *expected))) return false;
    }
  }
  return true;
}

bool round_bounds() {
  std::mt19937_64 rng(607);
  for (const FlowNetwork& net : acceptance_networks()) {
    Flow flow = compute_max_flow(net);
    if (least_sat_min_cut(net, flow, *constant_true(net)).rounds > 2) return false;
    for (int trial = 0; trial < 6; ++trial) {
      if (least_sat_min_cut(net, flow, *random_implicational_conjunction(net, 1, rng)).rounds > 3)
        return false;
      for (int j = 2; j <= 5; ++j) {
        SolveTrace t = least_sat_min_cut(net, flow, *random_implicational_conjunction(net, j, rng));
        if (t.rounds > 2 * j + 1) return false;
      }
    }
  }
  return true;
}

bool irreducibles_match() {
  std::mt19937_64 rng(613);
  for (const FlowNetwork& net : acceptance_networks()) {
    Flow flow = compute_max_flow(net);
    std::vector<PredicatePtr> regs{constant_true(net), uniformly_directed(net)};
    for (int j = 1; j <= 3; ++j)
      regs.push_back(random_regular_implicational_conjunction(net, j, rng));
    for (const PredicatePtr& B : regs) {
      std::vector<Cut> slice = oracle_slice(net, B);
      auto poset = compute_irreducibles(net, flow, B);
      if (poset.has_value() == slice.empty()) return false;
      if (!poset) continue;
      if (!same_cut_set(poset->elements, oracle::irreducibles(slice))) return false;
      if (static_cast<int>(poset->elements.size()) > net.non_terminal_count()) return false;
    }
  }
  for (int k = 1; k <= 4; ++k) {
    FlowNetwork net = fixtures::fan(k);
    Flow flow = compute_max_flow(net);
    auto poset = compute_irreducibles(net, flow, constant_true(net));
    if (!poset || static_cast<int>(poset->elements.size()) != k) return false;
  }
  FlowNetwork single(2, 0, 1, {{0, 1, 1}});
  auto poset = compute_irreducibles(single, compute_max_flow(single), constant_true(single));
  return poset && poset->elements.empty();
}

bool exactly_once() {
  std::mt19937_64 rng(617);
  for (const FlowNetwork& net : acceptance_networks()) {
    Flow flow = compute_max_flow(net);
    std::vector<PredicatePtr> regs{constant_true(net), uniformly_directed(net)};
    for (int j = 0; j < 10; ++j)
      regs.push_back(random_regular_implicational_conjunction(net, 1 + j % 3, rng));
    for (const PredicatePtr& B : regs) {
      std::vector<Cut> visited;
      enumerate_min_cuts(net, flow, B, [&](const Cut& c) {
        visited.push_back(c);
        return true;
      });
      std::vector<Cut> sorted = sorted_cuts(visited);
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
      if (!same_cut_set(visited, oracle_slice(net, B))) return false;
    }
  }
  for (int k : {2, 3}) {
    FlowNetwork net = fixtures::fan(k);
    Flow flow = compute_max_flow(net);
    uint64_t count = enumerate_min_cuts(net, flow, constant_true(net),
                                        [](const Cut&) { return true; });
    if (count != (uint64_t{1} << k)) return false;
  }
  FlowNetwork unique = fixtures::two_route_fan(2);
  return enumerate_min_cuts(unique, compute_max_flow(unique), constant_true(unique),
                            [](const Cut&) { return true; }) == 1;
}

bool delay_scaling() {
  auto ratio_for = [&](const FlowNetwork& net, std::optional<uint64_t> limit) {
    Flow flow = compute_max_flow(net);
    EnumerationStats stats;
    enumerate_min_cuts(net, flow, constant_true(net), [](const Cut&) { return true; }, limit,
                       &stats);
    int n = net.non_terminal_count();
    return stats.ops_per_cut() / (static_cast<double>(n) * n);
  };
  for (bool parallel_family : {true, false}) {
    double lo = 1e300, hi = 0;
    for (int n : {8, 16, 32, 64}) {
      double r = parallel_family ? ratio_for(fixtures::fan(n), uint64_t{4096})
                                 : ratio_for(fixtures::unit_path(n), std::nullopt);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
    }
    if (hi / lo > 4.0) return false;
  }
  return true;
}

bool slicing_agreement() {
  std::mt19937_64 rng(619);
  std::vector<FlowNetwork> nets = acceptance_networks();
  std::uniform_int_distribution<size_t> pick_net(0, nets.size() - 1);
  for (int pair = 0; pair < 50; ++pair) {
    const FlowNetwork& net = nets[pick_net(rng)];
    Flow flow = compute_max_flow(net);
    PredicatePtr b_reg = random_regular_implicational_conjunction(net, 1 + pair % 3, rng);
    ExpressionPtr expr = random_expression(net, rng, 2);
    auto general = [&](const Cut& c) { return expr->evaluate(c); };

    SliceResult result = slice_search(net, flow, b_reg, general);
    std::vector<Cut> slice = oracle_slice(net, b_reg);
    std::vector<Cut> target = oracle::filter_cuts(slice, general);
    if (result.found() != !target.empty()) return false;
    if (result.examined > slice.size() + 1) return false;
    if (result.found()) {
      if (cut_capacity(net, *result.cut) != flow.value) return false;
      if (!b_reg->evaluate(*result.cut) || !general(*result.cut)) return false;
    }
  }
  // Cardinality-constrained demo on the three-unit fan.
  FlowNetwork net = fixtures::fan(3);
  Flow flow = compute_max_flow(net);
  for (int k = 0; k <= 3; ++k) {
    ExpressionPtr card = expr_card_le(k);
    SliceResult result = slice_search(net, flow, constant_true(net),
                                      [&](const Cut& c) { return card->evaluate(c); });
    if (!result.found()) return false;
    if (cut_capacity(net, *result.cut) != flow.value) return false;
    if (result.cut->size() > k) return false;
  }
  return true;
}

bool integral_flow_counts() {
  for (int k = 1; k <= 3; ++k) {
    FlowNetwork net = fixtures::two_route_fan(k);
    if (oracle::all_min_cuts(net).size() != 1) return false;
    if (oracle::count_integral_max_flows(net) != (uint64_t{1} << k)) return false;
  }
  return true;
}

bool transition_chain() {
  for (int n = 4; n <= 10; ++n) {
    FlowNetwork net = fixtures::unit_path(n);
    std::vector<Cut> chain = fixtures::alternating_prefix_chain(net);
    for (size_t i = 0; i + 1 < chain.size(); ++i)
      if (!cut_lt(chain[i], chain[i + 1])) return false;
    if (count_flips(chain, uniformly_directed(net)) != n - 1) return false;
  }
  return true;
}

}  // namespace

int main() {
  Acceptance acceptance;
  acceptance.criterion(1, "forbidden-set emptiness equals min-cut over all cuts (exact)",
                       forbidden_min_cut_equivalence);
  acceptance.criterion(2, "min-cuts and the uniformly directed slice are sublattices",
                       sublattice_closure);
  acceptance.criterion(3, "solver returns the unique least satisfying min-cut, else infeasible",
                       least_ness);
  acceptance.criterion(4, "round bounds: 2 unconstrained, 3 implicational, 2j+1 conjunction",
                       round_bounds);
  acceptance.criterion(5, "irreducibles match the definitional oracle and stay within |V|",
                       irreducibles_match);
  acceptance.criterion(6, "enumeration lists each satisfying min-cut exactly once",
                       exactly_once);
  acceptance.criterion(7, "set operations per listed cut scale as c*n^2 (ratio within 4x)",
                       delay_scaling);
  acceptance.criterion(8, "slice search agrees with exhaustive search on 50 random pairs",
                       slicing_agreement);
  acceptance.criterion(9, "two-route fans: unique min-cut and 2^n integral max-flows",
                       integral_flow_counts);
  acceptance.criterion(10, "alternating chain flips the directed-cut predicate n-1 times",
                       transition_chain);
  if (acceptance.failures == 0) {
    std::printf("acceptance: all 10 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", acceptance.failures);
  return 1;
}
