#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mincut/enumeration.hpp"

namespace mincut {

struct SliceResult {
  std::optional<Cut> cut;
  uint64_t examined = 0;

  bool found() const { return cut.has_value(); }
};

struct SliceCount {
  uint64_t satisfying = 0;
  uint64_t examined = 0;
};

// Enumerates the min-cuts satisfying the regular predicate b_reg in the
// deterministic enumeration order and returns the first one on which the
// general predicate holds, or NotFound after exhausting the slice. Work is
// bounded by the slice size, never by the full cut lattice.
SliceResult slice_search(const FlowNetwork& net, const Flow& flow, const PredicatePtr& b_reg,
                         const std::function<bool(const Cut&)>& general);

// Counts the whole slice and how many of its cuts satisfy the general
// predicate.
SliceCount slice_count(const FlowNetwork& net, const Flow& flow, const PredicatePtr& b_reg,
                       const std::function<bool(const Cut&)>& general);

// Any-match variant: general-predicate evaluations race across
// MINCUT_THREADS workers over chunks of the streamed slice, so WHICH
// matching cut comes back is scheduling-dependent (found/not-found is not).
// With one worker this degenerates to slice_search. `general` must be safe
// to call concurrently.
SliceResult slice_search_any(const FlowNetwork& net, const Flow& flow, const PredicatePtr& b_reg,
                             const std::function<bool(const Cut&)>& general);

}  // namespace mincut
