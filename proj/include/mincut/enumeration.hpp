#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mincut/irreducibles.hpp"

namespace mincut {

// Instrumentation for the delay guarantees: elementary set operations are
// counted per element touched (one per order lookup or per slot of a set
// union/difference/join).
struct EnumerationStats {
  uint64_t listed = 0;
  uint64_t set_ops = 0;
  int max_depth = 0;

  double ops_per_cut() const { return listed == 0 ? 0.0 : static_cast<double>(set_ops) / listed; }
};

// Visitor: return true to continue, false to stop enumeration early.
using CutVisitor = std::function<bool(const Cut&)>;

// Lists every min-cut satisfying the regular predicate B exactly once, in a
// deterministic depth-first order over the ideals of the irreducible poset,
// streaming each cut to the visitor. Returns the number of cuts listed
// (0 when no min-cut satisfies B; at most `limit` when given).
uint64_t enumerate_min_cuts(const FlowNetwork& net, const Flow& flow, const PredicatePtr& B,
                            const CutVisitor& visitor,
                            std::optional<uint64_t> limit = std::nullopt,
                            EnumerationStats* stats = nullptr);

// Same traversal over an already computed poset.
uint64_t enumerate_ideals(const IrreduciblePoset& poset, const CutVisitor& visitor,
                          std::optional<uint64_t> limit = std::nullopt,
                          EnumerationStats* stats = nullptr);

}  // namespace mincut
