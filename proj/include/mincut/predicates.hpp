#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "mincut/flow_network.hpp"
#include "mincut/max_flow.hpp"

namespace mincut {

// Result of a forbidden-vertex search: either the set of vertices that must
// move to the S-side in any satisfying refinement, or a proof that no cut
// above the current one can satisfy the predicate.
class FeasibleSet {
 public:
  static FeasibleSet forbidden(VertexSet verts) { return FeasibleSet(std::move(verts), false); }
  static FeasibleSet infeasible(int universe) { return FeasibleSet(VertexSet(universe), true); }

  bool is_infeasible() const { return infeasible_; }
  bool empty() const { return !infeasible_ && vertices_.none(); }
  const VertexSet& vertices() const { return vertices_; }

 private:
  FeasibleSet(VertexSet verts, bool infeasible)
      : vertices_(std::move(verts)), infeasible_(infeasible) {}

  VertexSet vertices_;
  bool infeasible_;
};

// Exact set from the one-pass edge scan: tails of T->S edges carrying flow and
// heads of unsaturated S->T edges. Empty iff the cut is a min-cut. The sink
// may appear in the result; the solver reads that as "no min-cut above".
FeasibleSet min_cut_forbidden(const FlowNetwork& net, const Flow& flow, const Cut& cut);

// Dual direction: heads of T->S edges carrying flow and tails of unsaturated
// S->T edges. Empty iff the cut is a min-cut.
FeasibleSet min_cut_dual_forbidden(const FlowNetwork& net, const Flow& flow, const Cut& cut);

// Constraint over cuts with a sound forbidden-vertex search. Implementations
// are immutable and safe to share across threads.
class Predicate {
 public:
  virtual ~Predicate() = default;

  virtual bool evaluate(const Cut& cut) const = 0;
  virtual FeasibleSet forbidden(const Cut& cut) const = 0;

  // Only regular predicates support the dual search.
  virtual std::optional<FeasibleSet> dual_forbidden(const Cut&) const { return std::nullopt; }

  // Upper bound on truth flips along any chain of the cut lattice.
  virtual int transition_bound() const = 0;
};

using PredicatePtr = std::shared_ptr<const Predicate>;

PredicatePtr constant_true(const FlowNetwork& net);

// X ⊆ S implies u ∈ S. Requires u ∉ X and all vertices non-terminal.
PredicatePtr implicational(const FlowNetwork& net, const VertexSet& X, int u);

// Shorthand for implicational(∅, u): u must be on the source side.
PredicatePtr require_source(const FlowNetwork& net, int u);

// u must stay on the sink side; reports Infeasible as soon as u enters S,
// since the S-side only grows along the refinement order.
PredicatePtr forbid_source_side(const FlowNetwork& net, int u);

// No edge directed from T to S. Encoded as the conjunction over edges (u,v)
// of "v ∈ S implies u ∈ S"; edges touching a terminal reduce to the constant,
// require_source, or forbid_source forms. evaluate() agrees with the geometric
// definition on every cut.
PredicatePtr uniformly_directed(const FlowNetwork& net);

// Geometric definition, kept separate so tests can cross-check the encoding.
bool is_uniformly_directed_cut(const FlowNetwork& net, const Cut& cut);

// Conjunction: evaluate is the AND, forbidden the union, Infeasible if any
// conjunct reports it. Transition bounds add.
PredicatePtr conjunction(const FlowNetwork& net, std::vector<PredicatePtr> conjuncts);

// Evaluable-only boolean expression over cuts: atoms are "v ∈ S" and
// cardinality bounds on |S ∖ {s}|, combined with and/or/not. Used by slicing.
class CutExpression {
 public:
  virtual ~CutExpression() = default;
  virtual bool evaluate(const Cut& cut) const = 0;
};

using ExpressionPtr = std::shared_ptr<const CutExpression>;

ExpressionPtr expr_in_s(const FlowNetwork& net, int v);
ExpressionPtr expr_card_le(int k);
ExpressionPtr expr_card_ge(int k);
ExpressionPtr expr_and(std::vector<ExpressionPtr> args);
ExpressionPtr expr_or(std::vector<ExpressionPtr> args);
ExpressionPtr expr_not(ExpressionPtr arg);

}  // namespace mincut
