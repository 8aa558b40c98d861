#include "mincut/slicing.hpp"

#include <atomic>

#include "mincut/parallel.hpp"

namespace mincut {

SliceResult slice_search(const FlowNetwork& net, const Flow& flow, const PredicatePtr& b_reg,
                         const std::function<bool(const Cut&)>& general) {
  SliceResult result;
  enumerate_min_cuts(net, flow, b_reg, [&](const Cut& cut) {
    ++result.examined;
    if (general(cut)) {
      result.cut = cut;
      return false;
    }
    return true;
  });
  return result;
}

SliceCount slice_count(const FlowNetwork& net, const Flow& flow, const PredicatePtr& b_reg,
                       const std::function<bool(const Cut&)>& general) {
  SliceCount count;
  enumerate_min_cuts(net, flow, b_reg, [&](const Cut& cut) {
    ++count.examined;
    if (general(cut)) ++count.satisfying;
    return true;
  });
  return count;
}

SliceResult slice_search_any(const FlowNetwork& net, const Flow& flow, const PredicatePtr& b_reg,
                             const std::function<bool(const Cut&)>& general) {
  if (worker_count() <= 1) return slice_search(net, flow, b_reg, general);

  constexpr int kChunk = 64;
  SliceResult result;
  std::vector<Cut> chunk;
  std::atomic<int> winner{-1};
  auto race_chunk = [&] {
    parallel_for(static_cast<int>(chunk.size()), [&](int i) {
      if (winner.load(std::memory_order_relaxed) >= 0) return;
      if (general(chunk[i])) {
        int expected = -1;
        winner.compare_exchange_strong(expected, i);
      }
    });
    result.examined += chunk.size();
    if (winner.load() >= 0) result.cut = chunk[winner.load()];
    chunk.clear();
  };
  enumerate_min_cuts(net, flow, b_reg, [&](const Cut& cut) {
    chunk.push_back(cut);
    if (static_cast<int>(chunk.size()) < kChunk) return true;
    race_chunk();
    return !result.found();
  });
  if (!result.found() && !chunk.empty()) race_chunk();
  return result;
}

}  // namespace mincut
