#include "bbgkit_suite/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <map>
#include <set>
#include <string>

namespace bbg::suite {

namespace {

std::string name(int i) { return (i < 10 ? "0" : "") + std::to_string(i); }

std::vector<VertexId> names(int n) {
  std::vector<VertexId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(name(i));
  return ids;
}

using Pair = std::pair<int, int>;

Pair ordered(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<std::pair<VertexId, VertexId>> to_ids(const std::set<Pair>& edges) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (auto [a, b] : edges) out.emplace_back(name(a), name(b));
  return out;
}

}  // namespace

SimplicialGraph random_connected_graph(int n, double p, Rng& rng) {
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<Pair> edges;
  for (int i = 1; i < n; ++i) {
    int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.insert(ordered(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(j)]));
  }
  std::bernoulli_distribution coin(p);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (coin(rng)) edges.insert({a, b});
  return SimplicialGraph(names(n), to_ids(edges));
}

SimplicialGraph random_2tree(int n, CrownPolicy policy, Rng& rng) {
  std::set<Pair> edges{{0, 1}, {1, 2}, {0, 2}};
  std::vector<std::array<int, 3>> triangles{{0, 1, 2}};
  std::map<Pair, int> on_edge{{{0, 1}, 1}, {{1, 2}, 1}, {{0, 2}, 1}};
  int next = 3;

  auto attach = [&](Pair e) {
    int v = next++;
    edges.insert(ordered(e.first, v));
    edges.insert(ordered(e.second, v));
    triangles.push_back({e.first, e.second, v});
    ++on_edge[e];
    ++on_edge[ordered(e.first, v)];
    ++on_edge[ordered(e.second, v)];
  };
  auto creates_crown = [&](Pair e) {
    // Only triangles through e gain a covered edge.
    for (const auto& t : triangles) {
      std::array<Pair, 3> sides{ordered(t[0], t[1]), ordered(t[1], t[2]), ordered(t[0], t[2])};
      if (std::find(sides.begin(), sides.end(), e) == sides.end()) continue;
      bool crowned = std::all_of(sides.begin(), sides.end(), [&](Pair s) { return on_edge[s] + (s == e) >= 2; });
      if (crowned) return true;
    }
    return false;
  };

  if (policy == CrownPolicy::kForce && n >= 6)
    for (Pair e : {Pair{0, 1}, Pair{1, 2}, Pair{0, 2}}) attach(e);
  int stalls = 0;
  while (next < n) {
    std::vector<Pair> all(edges.begin(), edges.end());
    Pair e = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    if (policy == CrownPolicy::kAvoid && creates_crown(e) && ++stalls < 1000) continue;
    attach(e);
  }
  return SimplicialGraph(names(n), to_ids(edges));
}

SpanningTree random_spanning_tree(const SimplicialGraph& g, Rng& rng) {
  std::vector<std::size_t> order(g.edge_count());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::size_t> root(g.vertex_count());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<OrientedEdge> chosen;
  for (std::size_t k : order) {
    auto a = find(static_cast<std::size_t>(g.edge(k).u)), b = find(static_cast<std::size_t>(g.edge(k).v));
    if (a == b) continue;
    root[a] = b;
    bool flip = std::bernoulli_distribution(0.5)(rng);
    chosen.push_back(flip ? OrientedEdge{g.edge(k).v, g.edge(k).u} : OrientedEdge{g.edge(k).u, g.edge(k).v});
  }
  return SpanningTree(g, std::move(chosen));
}

BbgCharacter random_character(const SpanningTree& t, Rng& rng) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), pick(0, 9);
  std::vector<Rational> values(t.size());
  do {
    for (std::size_t k = 0; k < values.size(); ++k) {
      int roll = pick(rng);
      if (roll < 3) {
        values[k] = 0;
      } else if (roll < 5 && k > 0) {
        values[k] = values[std::uniform_int_distribution<std::size_t>(0, k - 1)(rng)];
      } else {
        values[k] = Rational(num(rng), den(rng));
        values[k].canonicalize();
      }
    }
  } while (std::all_of(values.begin(), values.end(), [](const Rational& x) { return x == 0; }) && !values.empty());
  return BbgCharacter(t, std::move(values));
}

}  // namespace bbg::suite
