#include "mincut/irreducibles.hpp"

#include <algorithm>

#include "mincut/parallel.hpp"

namespace mincut {

std::optional<IrreduciblePoset> compute_irreducibles(const FlowNetwork& net, const Flow& flow,
                                                     const PredicatePtr& B) {
  SolveTrace bottom_trace = least_sat_min_cut(net, flow, *B);
  if (!bottom_trace.found()) return std::nullopt;

  IrreduciblePoset poset;
  poset.bottom = *bottom_trace.cut;

  std::vector<int> vertices;
  for (int v = 0; v < net.vertex_count(); ++v)
    if (!net.is_terminal(v)) vertices.push_back(v);

  std::vector<std::optional<Cut>> per_vertex(vertices.size());
  parallel_for(static_cast<int>(vertices.size()), [&](int i) {
    PredicatePtr constrained =
        conjunction(net, {B, require_source(net, vertices[i])});
    SolveTrace trace = least_sat_min_cut(net, flow, *constrained);
    if (trace.found()) per_vertex[i] = std::move(trace.cut);
  });

  for (auto& cut : per_vertex) {
    if (!cut || *cut == poset.bottom) continue;
    bool seen = std::any_of(poset.elements.begin(), poset.elements.end(),
                            [&](const Cut& c) { return c == *cut; });
    if (!seen) poset.elements.push_back(std::move(*cut));
  }
  std::sort(poset.elements.begin(), poset.elements.end(), cut_canonical_less);

  int k = static_cast<int>(poset.elements.size());
  poset.strictly_below.assign(k, VertexSet(k));
  poset.filter.assign(k, VertexSet(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (cut_leq(poset.elements[i], poset.elements[j])) {
        poset.filter[i].set(j);
        if (i != j) poset.strictly_below[j].set(i);
      }
    }
  }
  return poset;
}

bool is_join_irreducible(const Cut& candidate, const std::vector<Cut>& all_satisfying) {
  bool has_smaller = false;
  Cut join_of_smaller(candidate.s_side.universe());
  for (const Cut& c : all_satisfying) {
    if (cut_lt(c, candidate)) {
      has_smaller = true;
      join_of_smaller = cut_join(join_of_smaller, c);
    }
  }
  // The bottom of the family is the join of the empty set, not irreducible.
  if (!has_smaller) return false;
  return join_of_smaller != candidate;
}

}  // namespace mincut
