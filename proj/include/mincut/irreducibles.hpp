#pragma once

#include <optional>
#include <vector>

#include "mincut/llp_solver.hpp"

namespace mincut {

// Join-irreducible elements of the sublattice of min-cuts satisfying a
// regular predicate, in Birkhoff form: the least satisfying min-cut plus the
// per-vertex least cuts strictly above it, with the order precomputed.
struct IrreduciblePoset {
  Cut bottom;
  // Deduplicated, bottom excluded, sorted by the canonical linear extension.
  std::vector<Cut> elements;
  // Index sets over `elements` (universe = elements.size()).
  // strictly_below[i] = { j : elements[j] < elements[i] }
  // filter[i]         = { j : elements[j] >= elements[i] } (principal filter, includes i)
  std::vector<VertexSet> strictly_below;
  std::vector<VertexSet> filter;

  IrreduciblePoset() : bottom(0) {}
};

// Runs the least-cut solver once for the bottom and once per non-terminal
// vertex u (requiring u on the S-side), sharing the precomputed max-flow.
// The per-vertex solves run concurrently when MINCUT_THREADS allows.
// Returns nullopt iff no min-cut satisfies B. B must be regular.
std::optional<IrreduciblePoset> compute_irreducibles(const FlowNetwork& net, const Flow& flow,
                                                     const PredicatePtr& B);

// Definitional check against the full satisfying set: a candidate is
// join-irreducible iff it is not the bottom of the set and differs from the
// join of its strict predecessors (equivalently, of any two smaller members).
bool is_join_irreducible(const Cut& candidate, const std::vector<Cut>& all_satisfying);

}  // namespace mincut
