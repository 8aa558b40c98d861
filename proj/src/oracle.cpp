#include "mincut/oracle.hpp"

#include <algorithm>
#include <string>

#include "mincut/errors.hpp"
#include "mincut/irreducibles.hpp"

namespace mincut::oracle {

namespace {

std::vector<int> non_terminals(const FlowNetwork& net) {
  std::vector<int> out;
  for (int v = 0; v < net.vertex_count(); ++v)
    if (!net.is_terminal(v)) out.push_back(v);
  return out;
}

}  // namespace

uint64_t naive_cut_capacity(const FlowNetwork& net, const Cut& cut) {
  net.check_cut(cut);
  uint64_t total = 0;
  for (int u = 0; u < net.vertex_count(); ++u) {
    bool u_in_s = u == net.source() || cut.contains(u);
    if (!u_in_s) continue;
    for (int v = 0; v < net.vertex_count(); ++v) {
      if (u == v) continue;
      bool v_in_s = v == net.source() || cut.contains(v);
      if (!v_in_s) total += net.capacity_between(u, v);
    }
  }
  return total;
}

std::vector<Cut> all_cuts(const FlowNetwork& net) {
  std::vector<int> verts = non_terminals(net);
  if (verts.size() > 16) throw StructuralError("oracle exhaustion capped at 16 non-terminals");
  std::vector<Cut> cuts;
  cuts.reserve(uint64_t{1} << verts.size());
  for (uint64_t mask = 0; mask < (uint64_t{1} << verts.size()); ++mask) {
    Cut cut(net.vertex_count());
    for (size_t i = 0; i < verts.size(); ++i)
      if (mask >> i & 1) cut.s_side.set(verts[i]);
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

std::vector<Cut> all_min_cuts(const FlowNetwork& net) {
  std::vector<Cut> cuts = all_cuts(net);
  uint64_t best = naive_cut_capacity(net, cuts.front());
  for (const Cut& c : cuts) best = std::min(best, naive_cut_capacity(net, c));
  std::vector<Cut> out;
  for (Cut& c : cuts)
    if (naive_cut_capacity(net, c) == best) out.push_back(std::move(c));
  return out;
}

std::vector<Cut> filter_cuts(const std::vector<Cut>& cuts,
                             const std::function<bool(const Cut&)>& keep) {
  std::vector<Cut> out;
  for (const Cut& c : cuts)
    if (keep(c)) out.push_back(c);
  return out;
}

bool sublattice_closed(const std::vector<Cut>& cuts) {
  std::vector<Cut> sorted = cuts;
  std::sort(sorted.begin(), sorted.end(), cut_canonical_less);
  auto member = [&](const Cut& c) {
    return std::binary_search(sorted.begin(), sorted.end(), c, cut_canonical_less);
  };
  for (const Cut& a : cuts)
    for (const Cut& b : cuts)
      if (!member(cut_meet(a, b)) || !member(cut_join(a, b))) return false;
  return true;
}

std::vector<Cut> irreducibles(const std::vector<Cut>& cuts) {
  std::vector<Cut> out;
  for (const Cut& c : cuts)
    if (is_join_irreducible(c, cuts)) out.push_back(c);
  std::sort(out.begin(), out.end(), cut_canonical_less);
  return out;
}

std::optional<Cut> least_of(const std::vector<Cut>& cuts) {
  if (cuts.empty()) return std::nullopt;
  Cut meet = cuts.front();
  for (const Cut& c : cuts) meet = cut_meet(meet, c);
  for (const Cut& c : cuts)
    if (c == meet) return meet;
  return std::nullopt;
}

uint64_t count_ideals(const std::vector<Cut>& elements) {
  size_t k = elements.size();
  if (k > 20) throw StructuralError("ideal counting capped at 20 elements");
  std::vector<uint32_t> strictly_below(k, 0);
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j)
      if (i != j && cut_lt(elements[j], elements[i])) strictly_below[i] |= uint32_t{1} << j;
  uint64_t ideals = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << k); ++mask) {
    bool closed = true;
    for (size_t i = 0; i < k && closed; ++i)
      if (mask >> i & 1) closed = (strictly_below[i] & ~mask) == 0;
    if (closed) ++ideals;
  }
  return ideals;
}

namespace {

struct FlowCounter {
  const FlowNetwork& net;
  uint64_t target;
  uint64_t budget;
  uint64_t steps = 0;
  uint64_t found = 0;
  std::vector<int64_t> balance;
  // Vertices whose incident edges are all assigned once edge i is set.
  std::vector<std::vector<int>> completed_after;

  FlowCounter(const FlowNetwork& n, uint64_t t, uint64_t b)
      : net(n),
        target(t),
        budget(b),
        balance(n.vertex_count(), 0),
        completed_after(n.edge_count()) {
    std::vector<int> last_edge(net.vertex_count(), -1);
    for (int i = 0; i < net.edge_count(); ++i) {
      last_edge[net.edges()[i].tail] = i;
      last_edge[net.edges()[i].head] = i;
    }
    for (int v = 0; v < net.vertex_count(); ++v)
      if (last_edge[v] >= 0 && !net.is_terminal(v)) completed_after[last_edge[v]].push_back(v);
  }

  void recurse(int edge) {
    if (++steps > budget) throw StructuralError("integral flow enumeration budget exceeded");
    if (edge == net.edge_count()) {
      if (balance[net.sink()] == static_cast<int64_t>(target)) ++found;
      return;
    }
    const Edge& e = net.edges()[edge];
    for (uint64_t f = 0; f <= e.capacity; ++f) {
      balance[e.tail] -= static_cast<int64_t>(f);
      balance[e.head] += static_cast<int64_t>(f);
      bool viable = true;
      for (int v : completed_after[edge])
        if (balance[v] != 0) viable = false;
      if (viable) recurse(edge + 1);
      balance[e.tail] += static_cast<int64_t>(f);
      balance[e.head] -= static_cast<int64_t>(f);
    }
  }
};

}  // namespace

uint64_t count_integral_max_flows(const FlowNetwork& net, uint64_t work_budget) {
  // Max-flow value by duality: the minimum cut capacity, from the naive scan,
  // keeping this count independent of the flow solver it helps check.
  std::vector<Cut> cuts = all_cuts(net);
  uint64_t target = naive_cut_capacity(net, cuts.front());
  for (const Cut& c : cuts) target = std::min(target, naive_cut_capacity(net, c));
  FlowCounter counter(net, target, work_budget);
  counter.recurse(0);
  return counter.found;
}

bool check_lattice_linear(const FlowNetwork& net, const Predicate& predicate, std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  std::vector<Cut> cuts = all_cuts(net);
  std::vector<Cut> satisfying;
  for (const Cut& cut : cuts)
    if (predicate.evaluate(cut)) satisfying.push_back(cut);

  for (const Cut& a : satisfying)
    for (const Cut& b : satisfying)
      if (!predicate.evaluate(cut_meet(a, b)))
        return fail("satisfying set is not meet-closed");

  for (const Cut& cut : cuts) {
    FeasibleSet f = predicate.forbidden(cut);
    if (predicate.evaluate(cut)) {
      if (!f.empty()) return fail("a satisfied cut reported forbidden vertices");
      continue;
    }
    if (f.is_infeasible()) {
      for (const Cut& h : cuts)
        if (cut_leq(cut, h) && predicate.evaluate(h))
          return fail("infeasibility reported below a satisfying cut");
      continue;
    }
    if (f.vertices().none())
      return fail("an unsatisfied cut reported nothing forbidden");
    bool sound = true;
    f.vertices().for_each([&](int v) {
      for (const Cut& h : cuts)
        if (cut_leq(cut, h) && !h.contains(v) && predicate.evaluate(h)) sound = false;
    });
    if (!sound) return fail("a forbidden vertex is avoidable in a satisfying refinement");
  }
  return true;
}

}  // namespace mincut::oracle
