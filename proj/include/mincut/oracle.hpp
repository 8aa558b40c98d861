#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mincut/flow_network.hpp"
#include "mincut/predicates.hpp"

namespace mincut::oracle {

// Desk-scale ground truth: everything here enumerates the full cut lattice
// (2^n over the non-terminals) or works directly from definitions, entirely
// independent of the flow/solver/enumeration code paths it checks.

// Capacity by a naive scan over all vertex pairs.
uint64_t naive_cut_capacity(const FlowNetwork& net, const Cut& cut);

// Every cut of the lattice, in ascending bitmask order. Refuses n > 16.
std::vector<Cut> all_cuts(const FlowNetwork& net);

// All cuts of minimum naive capacity. Refuses n > 16.
std::vector<Cut> all_min_cuts(const FlowNetwork& net);

std::vector<Cut> filter_cuts(const std::vector<Cut>& cuts,
                             const std::function<bool(const Cut&)>& keep);

// True when the meet and join of every pair is again in the family.
bool sublattice_closed(const std::vector<Cut>& cuts);

// Definitional irreducibles of a join-closed family.
std::vector<Cut> irreducibles(const std::vector<Cut>& cuts);

// The unique minimum of the family, if one exists.
std::optional<Cut> least_of(const std::vector<Cut>& cuts);

// Number of order ideals of the poset formed by `elements` under refinement
// (brute force over subsets; refuses more than 20 elements).
uint64_t count_ideals(const std::vector<Cut>& elements);

// Number of integral flows achieving the maximum value, by backtracking over
// per-edge flow values with conservation pruning. `work_budget` bounds the
// explored assignments; exceeding it throws.
uint64_t count_integral_max_flows(const FlowNetwork& net, uint64_t work_budget = 1u << 22);

// Property-check helper for user-supplied predicates, exhaustive over all
// cuts: a satisfied cut forbids nothing; an unsatisfied cut names a forbidden
// vertex or proves infeasibility; forbidden vertices and infeasibility
// reports are sound; the satisfying set is meet-closed. Returns false and
// fills `why` on the first violation.
bool check_lattice_linear(const FlowNetwork& net, const Predicate& predicate,
                          std::string* why = nullptr);

}  // namespace mincut::oracle
