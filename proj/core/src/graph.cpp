#include "bbgkit/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "bbgkit/error.hpp"

namespace bbg {

struct SimplicialGraph::Impl {
  std::vector<VertexId> ids;
  std::map<VertexId, Vertex> index;
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> adjacency;
  std::vector<std::vector<std::int32_t>> edge_matrix;  // -1 when not adjacent
};

SimplicialGraph::SimplicialGraph() : impl_(std::make_shared<Impl>()) {}

SimplicialGraph::SimplicialGraph(std::vector<VertexId> vertices,
                                 const std::vector<std::pair<VertexId, VertexId>>& edges) {
  auto impl = std::make_shared<Impl>();
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw InputError("duplicate vertex id '" + *std::adjacent_find(vertices.begin(), vertices.end()) + "'");
  impl->ids = std::move(vertices);
  const auto n = impl->ids.size();
  for (std::size_t i = 0; i < n; ++i) impl->index.emplace(impl->ids[i], static_cast<Vertex>(i));

  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    auto ia = impl->index.find(a), ib = impl->index.find(b);
    if (ia == impl->index.end()) throw InputError("edge endpoint '" + a + "' is not a vertex");
    if (ib == impl->index.end()) throw InputError("edge endpoint '" + b + "' is not a vertex");
    if (ia->second == ib->second) throw InputError("loop at vertex '" + a + "'");
    Edge e{std::min(ia->second, ib->second), std::max(ia->second, ib->second)};
    if (!seen.insert(e).second) throw InputError("repeated edge " + a + "-" + b);
  }
  impl->edges.assign(seen.begin(), seen.end());
  impl->adjacency.assign(n, {});
  impl->edge_matrix.assign(n, std::vector<std::int32_t>(n, -1));
  for (std::size_t k = 0; k < impl->edges.size(); ++k) {
    const Edge& e = impl->edges[k];
    impl->adjacency[e.u].push_back(e.v);
    impl->adjacency[e.v].push_back(e.u);
    impl->edge_matrix[e.u][e.v] = impl->edge_matrix[e.v][e.u] = static_cast<std::int32_t>(k);
  }
  for (auto& nb : impl->adjacency) std::sort(nb.begin(), nb.end());
  impl_ = std::move(impl);
}

std::size_t SimplicialGraph::vertex_count() const { return impl_->ids.size(); }
std::size_t SimplicialGraph::edge_count() const { return impl_->edges.size(); }
const std::vector<VertexId>& SimplicialGraph::ids() const { return impl_->ids; }

const VertexId& SimplicialGraph::id(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= impl_->ids.size()) throw InputError("vertex index out of range");
  return impl_->ids[static_cast<std::size_t>(v)];
}

std::optional<Vertex> SimplicialGraph::find(const VertexId& id) const {
  auto it = impl_->index.find(id);
  if (it == impl_->index.end()) return std::nullopt;
  return it->second;
}

Vertex SimplicialGraph::vertex(const VertexId& id) const {
  auto v = find(id);
  if (!v) throw InputError("unknown vertex '" + id + "'");
  return *v;
}

const std::vector<Edge>& SimplicialGraph::edges() const { return impl_->edges; }
const Edge& SimplicialGraph::edge(std::size_t index) const { return impl_->edges.at(index); }

std::optional<std::size_t> SimplicialGraph::edge_index(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= vertex_count() ||
      static_cast<std::size_t>(b) >= vertex_count())
    return std::nullopt;
  auto k = impl_->edge_matrix[a][b];
  if (k < 0) return std::nullopt;
  return static_cast<std::size_t>(k);
}

std::size_t SimplicialGraph::edge_index_checked(Vertex a, Vertex b) const {
  auto k = edge_index(a, b);
  if (!k) throw InputError("no edge " + id(a) + "-" + id(b));
  return *k;
}

bool SimplicialGraph::adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

const std::vector<Vertex>& SimplicialGraph::neighbors(Vertex v) const {
  return impl_->adjacency.at(static_cast<std::size_t>(v));
}

VertexSet SimplicialGraph::all_vertices() const {
  VertexSet all(vertex_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  return all;
}

bool SimplicialGraph::operator==(const SimplicialGraph& other) const {
  return impl_ == other.impl_ || (impl_->ids == other.impl_->ids && impl_->edges == other.impl_->edges);
}

std::string SimplicialGraph::edge_label(const Edge& e) const { return id(e.u) + "-" + id(e.v); }

// ---------------------------------------------------------------------------

VertexSet make_vertex_set(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& a, const VertexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }
bool contains(const VertexSet& s, Vertex v) { return std::binary_search(s.begin(), s.end(), v); }

// ---------------------------------------------------------------------------

Subgraph::Subgraph(SimplicialGraph parent, VertexSet vertices, std::vector<std::size_t> edges)
    : parent_(std::move(parent)), vertices_(make_vertex_set(std::move(vertices))), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (Vertex v : vertices_)
    if (v < 0 || static_cast<std::size_t>(v) >= parent_.vertex_count()) throw InputError("subgraph vertex out of range");
  std::size_t induced = 0;
  for (std::size_t k : edges_) {
    if (k >= parent_.edge_count()) throw InputError("subgraph edge out of range");
    const Edge& e = parent_.edge(k);
    if (!contains(vertices_, e.u) || !contains(vertices_, e.v))
      throw InputError("subgraph edge " + parent_.edge_label(e) + " leaves the vertex set");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j)
      if (parent_.adjacent(vertices_[i], vertices_[j])) ++induced;
  is_full_ = induced == edges_.size();
}

Subgraph Subgraph::full(const SimplicialGraph& parent, VertexSet vertices) {
  vertices = make_vertex_set(std::move(vertices));
  std::vector<std::size_t> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (auto k = parent.edge_index(vertices[i], vertices[j])) edges.push_back(*k);
  return Subgraph(parent, std::move(vertices), std::move(edges));
}

Subgraph Subgraph::spanned_by_edges(const SimplicialGraph& parent, std::vector<std::size_t> edges) {
  std::vector<Vertex> vs;
  for (std::size_t k : edges) {
    vs.push_back(parent.edge(k).u);
    vs.push_back(parent.edge(k).v);
  }
  return Subgraph(parent, make_vertex_set(std::move(vs)), std::move(edges));
}

bool Subgraph::contains_vertex(Vertex v) const { return contains(vertices_, v); }
bool Subgraph::contains_edge(std::size_t k) const { return std::binary_search(edges_.begin(), edges_.end(), k); }

std::vector<VertexId> Subgraph::vertex_ids() const {
  std::vector<VertexId> out;
  for (Vertex v : vertices_) out.push_back(parent_.id(v));
  return out;
}

SimplicialGraph Subgraph::as_graph() const {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (std::size_t k : edges_) es.emplace_back(parent_.id(parent_.edge(k).u), parent_.id(parent_.edge(k).v));
  return SimplicialGraph(vertex_ids(), es);
}

// ---------------------------------------------------------------------------

Subgraph link(const SimplicialGraph& g, Vertex v) {
  g.id(v);
  return Subgraph::full(g, g.neighbors(v));
}

Subgraph star(const SimplicialGraph& g, Vertex v) {
  Subgraph lk = link(g, v);
  std::vector<std::size_t> edges = lk.edges();
  for (Vertex w : g.neighbors(v)) edges.push_back(g.edge_index_checked(v, w));
  VertexSet vs = lk.vertices();
  vs.push_back(v);
  return Subgraph(g, make_vertex_set(std::move(vs)), std::move(edges));
}

std::vector<VertexSet> components(const SimplicialGraph& g, const VertexSet& within) {
  std::vector<char> allowed(g.vertex_count(), 0), seen(g.vertex_count(), 0);
  for (Vertex v : within) allowed[v] = 1;
  std::vector<VertexSet> out;
  for (Vertex s : within) {
    if (seen[s]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x))
        if (allowed[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const SimplicialGraph& g) { return components(g, g.all_vertices()); }

bool is_connected(const SimplicialGraph& g) { return components(g).size() <= 1; }

namespace {

std::string describe_components(const SimplicialGraph& g) {
  std::string text;
  for (const auto& comp : components(g)) {
    text += text.empty() ? "{" : ", {";
    for (std::size_t i = 0; i < comp.size(); ++i) text += (i ? "," : "") + g.id(comp[i]);
    text += "}";
  }
  return text;
}

struct BlockSearch {
  const SimplicialGraph& g;
  std::vector<int> disc, low;
  std::vector<char> is_cut;
  std::vector<Edge> edge_stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  explicit BlockSearch(const SimplicialGraph& graph)
      : g(graph), disc(graph.vertex_count(), -1), low(graph.vertex_count(), 0), is_cut(graph.vertex_count(), 0) {}

  void run(Vertex root) {
    int children = 0;
    visit(root, -1, children);
    if (children > 1) is_cut[root] = 1;
  }

  void visit(Vertex u, Vertex parent, int& root_children) {
    disc[u] = low[u] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] < 0) {
        if (parent < 0) ++root_children;
        edge_stack.push_back({u, w});
        int unused = 0;
        visit(w, u, unused);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent >= 0) is_cut[u] = 1;
          std::vector<Vertex> block;
          while (true) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e.u);
            block.push_back(e.v);
            if (e.u == u && e.v == w) break;
          }
          blocks.push_back(make_vertex_set(std::move(block)));
        }
      } else if (w != parent && disc[w] < disc[u]) {
        edge_stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }
};

void require_connected(const SimplicialGraph& g, const char* what) {
  if (!is_connected(g))
    throw PreconditionError(std::string(what) + " requires a connected graph; components: " + describe_components(g));
}

}  // namespace

std::vector<Vertex> articulation_points(const SimplicialGraph& g) {
  require_connected(g, "articulation_points");
  if (g.vertex_count() == 0) return {};
  BlockSearch search(g);
  search.run(0);
  std::vector<Vertex> out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (search.is_cut[v]) out.push_back(static_cast<Vertex>(v));
  return out;
}

Biconnectivity is_biconnected(const SimplicialGraph& g) {
  require_connected(g, "is_biconnected");
  if (g.vertex_count() < 2) throw PreconditionError("is_biconnected requires at least two vertices");
  auto cuts = articulation_points(g);
  if (cuts.empty()) return {true, std::nullopt};
  return {false, cuts.front()};
}

std::vector<Subgraph> biconnected_components(const SimplicialGraph& g) {
  require_connected(g, "biconnected_components");
  if (g.vertex_count() == 0) return {};
  if (g.vertex_count() == 1) return {Subgraph::full(g, {0})};
  BlockSearch search(g);
  search.run(0);
  std::sort(search.blocks.begin(), search.blocks.end());
  std::vector<Subgraph> out;
  for (auto& b : search.blocks) out.push_back(Subgraph::full(g, b));
  return out;
}

bool is_separating(const SimplicialGraph& g, const VertexSet& s) {
  VertexSet set = make_vertex_set(s);
  for (Vertex v : set) g.id(v);
  if (set.size() >= g.vertex_count()) throw InputError("is_separating: the vertex set must be a proper subset");
  return components(g, set_difference(g.all_vertices(), set)).size() > 1;
}

bool is_minimal_separating(const SimplicialGraph& g, const VertexSet& s) {
  if (s.empty() || s.size() >= g.vertex_count()) return false;
  auto comps = components(g, set_difference(g.all_vertices(), s));
  if (comps.size() < 2) return false;
  for (Vertex x : s)
    for (const auto& comp : comps) {
      bool touches = std::any_of(comp.begin(), comp.end(), [&](Vertex y) { return g.adjacent(x, y); });
      if (!touches) return false;
    }
  return true;
}

std::vector<VertexSet> all_minimal_pair_separators(const SimplicialGraph& g) {
  const VertexSet all = g.all_vertices();
  std::set<VertexSet> found;
  std::deque<VertexSet> queue;

  auto neighbourhood_of = [&](const VertexSet& comp) {
    std::vector<Vertex> nb;
    for (Vertex x : comp)
      for (Vertex y : g.neighbors(x))
        if (!contains(comp, y)) nb.push_back(y);
    return make_vertex_set(std::move(nb));
  };
  auto expand = [&](const VertexSet& removed) {
    for (const auto& comp : components(g, set_difference(all, removed))) {
      VertexSet sep = neighbourhood_of(comp);
      if (!sep.empty() && found.insert(sep).second) queue.push_back(std::move(sep));
    }
  };

  for (Vertex v : all) {
    VertexSet closed = g.neighbors(v);
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    expand(closed);
  }
  while (!queue.empty()) {
    VertexSet s = queue.front();
    queue.pop_front();
    for (Vertex x : s) expand(set_union(s, g.neighbors(x)));
  }
  return {found.begin(), found.end()};
}

namespace {

bool size_then_lex(const VertexSet& a, const VertexSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::vector<VertexSet> exhaustive_minimal_separators(const SimplicialGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> separating;
  for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << n); ++mask) {
    VertexSet s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(static_cast<Vertex>(i));
    if (is_separating(g, s)) separating.push_back(std::move(s));
  }
  std::vector<VertexSet> minimal;
  for (const auto& s : separating) {
    bool has_smaller = std::any_of(separating.begin(), separating.end(),
                                   [&](const VertexSet& t) { return t.size() < s.size() && is_subset(t, s); });
    if (!has_smaller) minimal.push_back(s);
  }
  return minimal;
}

}  // namespace

std::vector<Subgraph> minimal_full_separating_subgraphs(const SimplicialGraph& g, const SeparatorOptions& options) {
  require_connected(g, "minimal_full_separating_subgraphs");
  if (g.vertex_count() < 3) throw PreconditionError("minimal_full_separating_subgraphs requires at least three vertices");

  std::vector<VertexSet> sets;
  if (options.method == SeparatorMethod::kExhaustive) {
    if (g.vertex_count() > options.exhaustive_limit || g.vertex_count() > 62)
      throw PreconditionError("exhaustive separator enumeration refused above " +
                              std::to_string(options.exhaustive_limit) + " vertices");
    sets = exhaustive_minimal_separators(g);
  } else {
    for (auto& s : all_minimal_pair_separators(g))
      if (is_minimal_separating(g, s)) sets.push_back(std::move(s));
  }
  std::sort(sets.begin(), sets.end(), size_then_lex);
  std::vector<Subgraph> out;
  out.reserve(sets.size());
  for (auto& s : sets) out.push_back(Subgraph::full(g, std::move(s)));
  return out;
}

}  // namespace bbg
