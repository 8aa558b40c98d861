#include "mincut/enumeration.hpp"

#include <vector>

namespace mincut {

namespace {

class Traversal {
 public:
  Traversal(const IrreduciblePoset& poset, const CutVisitor& visitor,
            std::optional<uint64_t> limit, EnumerationStats* stats)
      : poset_(poset),
        visitor_(visitor),
        limit_(limit),
        stats_(stats),
        k_(static_cast<int>(poset.elements.size())) {}

  uint64_t run() {
    VertexSet usable(k_);
    for (int i = 0; i < k_; ++i) usable.set(i);
    list_next(poset_.bottom, usable, 1);
    return listed_;
  }

 private:
  void count_ops(uint64_t n) {
    if (stats_) stats_->set_ops += n;
  }

  // Emits the join of the current ideal, then recurses once per nonempty
  // subset of the minimal elements of `usable`. Returns false to stop.
  bool list_next(const Cut& join, VertexSet usable, int depth) {
    if (stopped_) return false;
    ++listed_;
    if (stats_) {
      ++stats_->listed;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    if (!visitor_(join)) {
      stopped_ = true;
      return false;
    }
    if (limit_ && listed_ >= *limit_) {
      stopped_ = true;
      return false;
    }

    std::vector<int> minimal;
    usable.for_each([&](int i) {
      count_ops(static_cast<uint64_t>(k_));
      if (!poset_.strictly_below[i].intersects(usable)) minimal.push_back(i);
    });
    if (minimal.empty()) return true;

    int width = static_cast<int>(minimal.size());
    if (width <= 63) {
      // Nonempty subsets in ascending binary order, bit j <-> minimal[j].
      for (uint64_t mask = 1; mask < (uint64_t{1} << width); ++mask) {
        auto chosen = [mask](size_t j) { return (mask >> j & 1) != 0; };
        if (!descend(join, usable, minimal, chosen, depth)) return false;
      }
      return true;
    }
    // Widths beyond the word size cannot occur at any enumerable scale, but
    // stay correct: walk the subsets recursively.
    std::vector<char> picks(width, 0);
    return wide_subsets(join, usable, minimal, picks, 0, false, depth);
  }

  // One child call: chosen minimal elements extend the ideal, the filters of
  // the unchosen ones leave the usable set for the whole subtree.
  template <class ChosenFn>
  bool descend(const Cut& join, const VertexSet& usable, const std::vector<int>& minimal,
               const ChosenFn& chosen, int depth) {
    Cut child_join = join;
    VertexSet child_usable = usable;
    for (size_t j = 0; j < minimal.size(); ++j) {
      int x = minimal[j];
      if (chosen(j)) {
        count_ops(static_cast<uint64_t>(child_join.s_side.universe()));
        child_join.s_side |= poset_.elements[x].s_side;
        child_usable.reset(x);
      } else {
        count_ops(static_cast<uint64_t>(k_));
        child_usable -= poset_.filter[x];
      }
    }
    return list_next(child_join, std::move(child_usable), depth + 1);
  }

  bool wide_subsets(const Cut& join, const VertexSet& usable, const std::vector<int>& minimal,
                    std::vector<char>& picks, size_t at, bool any, int depth) {
    if (at == minimal.size()) {
      if (!any) return true;
      auto chosen = [&picks](size_t j) { return picks[j] != 0; };
      return descend(join, usable, minimal, chosen, depth);
    }
    picks[at] = 0;
    if (!wide_subsets(join, usable, minimal, picks, at + 1, any, depth)) return false;
    picks[at] = 1;
    return wide_subsets(join, usable, minimal, picks, at + 1, true, depth);
  }

  const IrreduciblePoset& poset_;
  const CutVisitor& visitor_;
  std::optional<uint64_t> limit_;
  EnumerationStats* stats_;
  int k_;
  uint64_t listed_ = 0;
  bool stopped_ = false;
};

}  // namespace

uint64_t enumerate_ideals(const IrreduciblePoset& poset, const CutVisitor& visitor,
                          std::optional<uint64_t> limit, EnumerationStats* stats) {
  if (limit && *limit == 0) return 0;
  return Traversal(poset, visitor, limit, stats).run();
}

uint64_t enumerate_min_cuts(const FlowNetwork& net, const Flow& flow, const PredicatePtr& B,
                            const CutVisitor& visitor, std::optional<uint64_t> limit,
                            EnumerationStats* stats) {
  auto poset = compute_irreducibles(net, flow, B);
  if (!poset) return 0;
  return enumerate_ideals(*poset, visitor, limit, stats);
}

}  // namespace mincut
