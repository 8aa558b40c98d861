#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mincut/predicates.hpp"

namespace mincut {

// Per-run instrumentation of the round-based solver.
struct SolveTrace {
  int rounds = 0;
  // One entry per round: (vertices advanced for the min-cut predicate,
  // vertices advanced for B).
  std::vector<std::pair<int, int>> per_round_forbidden;
  // Present iff a satisfying min-cut was found.
  std::optional<Cut> cut;
  // Truth flips of B along the chain of visited cuts, interleaved with the
  // post-advancement cuts of each round.
  int transitions_observed = 0;

  bool found() const { return cut.has_value(); }
};

enum class Advancement {
  // Advance every forbidden vertex each round; the min-cut predicate is
  // advanced to its least non-forbidden refinement (residual closure).
  kStrong,
  // Advance a single forbidden vertex per round. Exists for trace comparison
  // only; outcomes are identical, round counts are not.
  kSingleVertex,
};

// Round-based search for the least min-cut (by refinement) at or above
// `start` that satisfies B, or Infeasible when none exists. Each round first
// advances B's forbidden vertices, then closes under the min-cut forbidden
// search. Terminates when a round makes no progress with nothing forbidden.
SolveTrace least_sat_min_cut_from(const FlowNetwork& net, const Flow& flow, const Predicate& B,
                                  const Cut& start,
                                  Advancement advancement = Advancement::kStrong);

// Same, starting from the bottom cut (S = {s}); the result is the least
// min-cut satisfying B over the whole lattice.
SolveTrace least_sat_min_cut(const FlowNetwork& net, const Flow& flow, const Predicate& B,
                             Advancement advancement = Advancement::kStrong);

}  // namespace mincut
