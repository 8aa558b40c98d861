#include "mincut/fixtures.hpp"

#include <random>

#include "mincut/errors.hpp"

namespace mincut::fixtures {

FlowNetwork fan(int k) {
  if (k < 1) throw StructuralError("fan needs at least one unit");
  std::vector<Edge> edges;
  int t = k + 1;
  for (int i = 1; i <= k; ++i) {
    edges.push_back({0, i, 1});
    edges.push_back({i, t, 1});
  }
  return FlowNetwork(k + 2, 0, t, edges);
}

int fan_vertex(int i) { return i; }

FlowNetwork two_route_fan(int k) {
  if (k < 1) throw StructuralError("two_route_fan needs at least one unit");
  std::vector<Edge> edges;
  int t = 3 * k + 1;
  for (int i = 1; i <= k; ++i) {
    int a = two_route_a(i), b = two_route_b(i), c = two_route_c(i);
    edges.push_back({0, a, 1});
    edges.push_back({0, b, 1});
    edges.push_back({a, c, 1});
    edges.push_back({b, c, 1});
    edges.push_back({c, t, 1});
  }
  return FlowNetwork(3 * k + 2, 0, t, edges);
}

int two_route_a(int i) { return 3 * (i - 1) + 1; }
int two_route_b(int i) { return 3 * (i - 1) + 2; }
int two_route_c(int i) { return 3 * (i - 1) + 3; }

FlowNetwork unit_path(int k) {
  return path_with_capacities(std::vector<uint64_t>(k + 1, 1));
}

FlowNetwork path_with_capacities(const std::vector<uint64_t>& caps) {
  if (caps.size() < 2) throw StructuralError("path needs at least one inner vertex");
  int k = static_cast<int>(caps.size()) - 1;
  std::vector<Edge> edges;
  edges.push_back({0, 1, caps[0]});
  for (int i = 1; i < k; ++i) edges.push_back({i, i + 1, caps[i]});
  edges.push_back({k, k + 1, caps[k]});
  return FlowNetwork(k + 2, 0, k + 1, edges);
}

int path_vertex(int i) { return i; }

FlowNetwork demo_network() {
  // s=0, a=1, b=2, c=3, d=4, e=5, t=6
  std::vector<Edge> edges = {
      {0, 1, 2}, {0, 2, 1}, {0, 3, 1}, {2, 1, 1}, {1, 4, 2},
      {2, 4, 1}, {3, 5, 1}, {4, 6, 2}, {5, 6, 1},
  };
  return FlowNetwork(7, 0, 6, edges);
}

FlowNetwork layered_random(const std::vector<int>& layer_sizes, uint64_t seed, uint64_t max_cap) {
  int n = 0;
  for (int size : layer_sizes) {
    if (size < 1) throw StructuralError("layer sizes must be positive");
    n += size;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<uint64_t> cap(1, max_cap);
  std::vector<Edge> edges;
  int t = n + 1;
  int first = 1;
  std::vector<std::pair<int, int>> ranges;
  for (int size : layer_sizes) {
    ranges.emplace_back(first, first + size);
    first += size;
  }
  for (int v = ranges.front().first; v < ranges.front().second; ++v)
    edges.push_back({0, v, cap(rng)});
  for (size_t l = 0; l + 1 < ranges.size(); ++l)
    for (int u = ranges[l].first; u < ranges[l].second; ++u)
      for (int v = ranges[l + 1].first; v < ranges[l + 1].second; ++v)
        edges.push_back({u, v, cap(rng)});
  for (int v = ranges.back().first; v < ranges.back().second; ++v)
    edges.push_back({v, t, cap(rng)});
  return FlowNetwork(n + 2, 0, t, edges);
}

FlowNetwork layered_random(int n, int layers, uint64_t seed, uint64_t max_cap) {
  if (layers < 1 || n < layers) throw StructuralError("need at least one vertex per layer");
  std::vector<int> sizes(layers, n / layers);
  for (int i = 0; i < n % layers; ++i) ++sizes[i];
  return layered_random(sizes, seed, max_cap);
}

std::vector<Cut> alternating_prefix_chain(const FlowNetwork& path_net) {
  int n = path_net.non_terminal_count();
  if (n < 3) throw StructuralError("alternating chain needs at least three inner vertices");
  auto formula_cut = [&](int i) {
    Cut cut(path_net.vertex_count());
    if (i == 1) {
      cut.s_side.set(path_vertex(2));
    } else if (i % 2 == 0) {
      for (int j = 1; j <= i; ++j) cut.s_side.set(path_vertex(j));
    } else {
      for (int j = 1; j <= i - 1; ++j) cut.s_side.set(path_vertex(j));
      cut.s_side.set(path_vertex(i + 1));
    }
    return cut;
  };
  // Odd chains anchor at the bottom cut: the closed-form last element would
  // need a vertex past the path's end, and nothing above the longest even
  // prefix breaks the alternation.
  std::vector<Cut> chain;
  if (n % 2 == 0) {
    for (int i = 1; i <= n; ++i) chain.push_back(formula_cut(i));
  } else {
    chain.push_back(path_net.bottom_cut());
    for (int i = 1; i <= n - 1; ++i) chain.push_back(formula_cut(i));
  }
  return chain;
}

std::vector<Fixture> standard_fixtures() {
  std::vector<Fixture> out;
  auto add = [&](std::string name, FlowNetwork net, std::optional<uint64_t> value,
                 std::optional<uint64_t> cuts, std::optional<int> irr) {
    out.push_back({std::move(name), std::move(net), value, cuts, irr});
  };
  for (int k = 1; k <= 4; ++k)
    add("fan_" + std::to_string(k), fan(k), k, uint64_t{1} << k, k);
  for (int k = 1; k <= 3; ++k)
    add("two_route_fan_" + std::to_string(k), two_route_fan(k), k, 1, 0);
  for (int k = 1; k <= 4; ++k)
    add("unit_path_" + std::to_string(k), unit_path(k), 1, k + 1, k);
  add("tapered_path", path_with_capacities({3, 2, 1, 3}), 1, 1, 0);
  add("alternating_path", path_with_capacities({1, 2, 1, 2, 1}), 1, 3, 2);
  add("demo", demo_network(), 3, std::nullopt, std::nullopt);
  add("layered_6_2", layered_random(6, 2, 11), std::nullopt, std::nullopt, std::nullopt);
  add("layered_8_3", layered_random(8, 3, 23), std::nullopt, std::nullopt, std::nullopt);
  add("layered_9_3", layered_random(9, 3, 37), std::nullopt, std::nullopt, std::nullopt);
  add("layered_10_4", layered_random(10, 4, 41), std::nullopt, std::nullopt, std::nullopt);
  return out;
}

}  // namespace mincut::fixtures
