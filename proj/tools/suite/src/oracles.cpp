#include "bbgkit_suite/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

namespace bbg::suite {

namespace {

using Adjacency = std::vector<std::vector<int>>;

Adjacency adjacency(const SimplicialGraph& g) {
  Adjacency adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

// Components of the graph with the vertices in `removed` deleted.
int count_components(const Adjacency& adj, std::uint32_t removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(adj.size(), 0);
  int count = 0;
  for (int s = 0; s < n; ++s) {
    if ((removed >> s & 1U) || seen[static_cast<std::size_t>(s)]) continue;
    ++count;
    std::vector<int> stack{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[static_cast<std::size_t>(x)])
        if (!(removed >> y & 1U) && !seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          stack.push_back(y);
        }
    }
  }
  return count;
}

std::vector<int> bfs(const Adjacency& adj, int source) {
  std::vector<int> dist(adj.size(), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[static_cast<std::size_t>(x)])
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        q.push(y);
      }
  }
  return dist;
}

bool spanner_by_distances(const Adjacency& g, const Adjacency& t) {
  for (std::size_t s = 0; s < g.size(); ++s) {
    auto dg = bfs(g, static_cast<int>(s));
    auto dt = bfs(t, static_cast<int>(s));
    for (std::size_t x = 0; x < g.size(); ++x)
      if (dt[x] < 0 || dt[x] > 2 * dg[x]) return false;
  }
  return true;
}

}  // namespace

std::vector<VertexSet> brute_force_minimal_separators(const SimplicialGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 20) return {};
  Adjacency adj = adjacency(g);
  const std::uint32_t all = (1U << n) - 1;
  auto separates = [&](std::uint32_t s) { return s != all && count_components(adj, s) >= 2; };
  std::vector<VertexSet> out;
  for (std::uint32_t s = 1; s < all; ++s) {
    if (!separates(s)) continue;
    bool minimal = true;
    for (std::uint32_t sub = (s - 1) & s; sub && minimal; sub = (sub - 1) & s) minimal = !separates(sub);
    if (!minimal) continue;
    VertexSet vs;
    for (std::size_t v = 0; v < n; ++v)
      if (s >> v & 1U) vs.push_back(static_cast<Vertex>(v));
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

bool all_pairs_spanner_check(const SimplicialGraph& g, const SpanningTree& t) {
  Adjacency tree(g.vertex_count());
  for (const auto& e : t.edges()) {
    tree[static_cast<std::size_t>(e.tail)].push_back(e.head);
    tree[static_cast<std::size_t>(e.head)].push_back(e.tail);
  }
  return spanner_by_distances(adjacency(g), tree);
}

std::size_t brute_force_spanner_count(const SimplicialGraph& g) {
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  if (n == 0 || m > 24) return 0;
  Adjacency adj = adjacency(g);
  std::size_t count = 0;
  std::vector<char> pick(m, 0);
  std::fill(pick.end() - static_cast<std::ptrdiff_t>(n - 1), pick.end(), 1);
  do {
    Adjacency tree(n);
    for (std::size_t k = 0; k < m; ++k)
      if (pick[k]) {
        tree[static_cast<std::size_t>(g.edge(k).u)].push_back(g.edge(k).v);
        tree[static_cast<std::size_t>(g.edge(k).v)].push_back(g.edge(k).u);
      }
    if (count_components(tree, 0) == 1 && spanner_by_distances(adj, tree)) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

}  // namespace bbg::suite
