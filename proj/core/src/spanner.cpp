#include "bbgkit/spanner.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

#include "bbgkit/error.hpp"

namespace bbg {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t root(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  // Union by size without path compression so that unions can be undone.
  bool unite(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void undo() {
    std::size_t b = history_.back();
    history_.pop_back();
    std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_, size_;
  std::vector<std::size_t> history_;
};

std::vector<std::array<std::size_t, 3>> graph_triangles(const SimplicialGraph& g) {
  std::vector<std::array<std::size_t, 3>> out;
  for (const Edge& e : g.edges())
    for (Vertex w : g.neighbors(e.v))
      if (w > e.v && g.adjacent(e.u, w))
        out.push_back({g.edge_index_checked(e.u, e.v), g.edge_index_checked(e.u, w), g.edge_index_checked(e.v, w)});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

SpanningTree::SpanningTree(SimplicialGraph parent, std::vector<OrientedEdge> edges)
    : parent_(std::move(parent)), edges_(std::move(edges)) {
  const std::size_t n = parent_.vertex_count();
  if (n == 0) throw InputError("spanning tree of an empty graph");
  if (edges_.size() + 1 != n)
    throw InputError("a spanning tree needs " + std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  coordinate_.assign(parent_.edge_count(), -1);
  DisjointSets sets(n);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const OrientedEdge& e = edges_[k];
    auto idx = parent_.edge_index(e.tail, e.head);
    if (!idx) throw InputError("tree edge " + std::to_string(e.tail) + "-" + std::to_string(e.head) + " is not a graph edge");
    if (coordinate_[*idx] >= 0) throw InputError("tree edge " + parent_.edge_label(parent_.edge(*idx)) + " repeated");
    if (!sets.unite(static_cast<std::size_t>(e.tail), static_cast<std::size_t>(e.head)))
      throw InputError("tree edges contain a cycle through " + parent_.edge_label(parent_.edge(*idx)));
    coordinate_[*idx] = static_cast<std::int32_t>(k);
  }

  up_.assign(n, -1);
  up_coordinate_.assign(n, -1);
  depth_.assign(n, -1);
  std::vector<std::vector<std::pair<Vertex, std::int32_t>>> adj(n);
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    adj[edges_[k].tail].emplace_back(edges_[k].head, static_cast<std::int32_t>(k));
    adj[edges_[k].head].emplace_back(edges_[k].tail, static_cast<std::int32_t>(k));
  }
  std::deque<Vertex> queue{0};
  depth_[0] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (auto [y, k] : adj[x])
      if (depth_[y] < 0) {
        depth_[y] = depth_[x] + 1;
        up_[y] = x;
        up_coordinate_[y] = k;
        queue.push_back(y);
      }
  }
}

SpanningTree SpanningTree::canonical(SimplicialGraph parent, std::vector<std::size_t> edge_indices) {
  std::sort(edge_indices.begin(), edge_indices.end());
  std::vector<OrientedEdge> edges;
  for (std::size_t k : edge_indices) edges.push_back({parent.edge(k).u, parent.edge(k).v});
  return SpanningTree(std::move(parent), std::move(edges));
}

SpanningTree SpanningTree::from_ids(SimplicialGraph parent, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<OrientedEdge> oriented;
  for (const auto& [a, b] : edges) oriented.push_back({parent.vertex(a), parent.vertex(b)});
  return SpanningTree(std::move(parent), std::move(oriented));
}

std::vector<std::size_t> SpanningTree::graph_edge_indices() const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) out.push_back(*parent_.edge_index(e.tail, e.head));
  return out;
}

std::optional<std::size_t> SpanningTree::coordinate_of(std::size_t graph_edge) const {
  if (graph_edge >= coordinate_.size() || coordinate_[graph_edge] < 0) return std::nullopt;
  return static_cast<std::size_t>(coordinate_[graph_edge]);
}

std::vector<Vertex> SpanningTree::path(Vertex from, Vertex to) const {
  parent_.id(from);
  parent_.id(to);
  std::vector<Vertex> left{from}, right{to};
  while (left.back() != right.back()) {
    if (depth_[left.back()] >= depth_[right.back()])
      left.push_back(up_[left.back()]);
    else
      right.push_back(up_[right.back()]);
  }
  for (auto it = right.rbegin() + 1; it != right.rend(); ++it) left.push_back(*it);
  return left;
}

std::vector<int> SpanningTree::path_coefficients(Vertex from, Vertex to) const {
  std::vector<int> c(edges_.size(), 0);
  auto p = path(from, to);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    auto k = static_cast<std::size_t>(coordinate_[*parent_.edge_index(p[i], p[i + 1])]);
    c[k] += edges_[k].tail == p[i] ? 1 : -1;
  }
  return c;
}

std::vector<std::pair<VertexId, VertexId>> SpanningTree::oriented_ids() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& e : edges_) out.emplace_back(parent_.id(e.tail), parent_.id(e.head));
  return out;
}

// ---------------------------------------------------------------------------

SpannerCheck verify_tree_2_spanner(const SimplicialGraph& g, const SpanningTree& t) {
  if (!(t.parent() == g)) throw InputError("verify_tree_2_spanner: tree does not span this graph");
  for (const Edge& e : g.edges())
    if (t.distance(e.u, e.v) > 2) return {false, e};
  return {true, std::nullopt};
}

namespace {

class SpannerSearch {
 public:
  SpannerSearch(const SimplicialGraph& g, std::size_t limit)
      : g_(g), n_(g.vertex_count()), m_(g.edge_count()), limit_(limit), sets_(g.vertex_count()) {
    triangles_ = graph_triangles(g);
    on_edge_.assign(m_, {});
    for (std::size_t t = 0; t < triangles_.size(); ++t)
      for (std::size_t e : triangles_[t]) on_edge_[e].push_back(t);
    state_.assign(m_, kUnknown);
  }

  std::vector<SpanningTree> run(SpannerSearchStats* stats) {
    bool ok = true;
    for (std::size_t e = 0; e < m_ && ok; ++e)
      if (on_edge_[e].empty()) ok = assign(e, kIn) && propagate();
    if (ok) branch();
    if (stats) stats->nodes = nodes_;
    return std::move(results_);
  }

 private:
  enum : char { kUnknown = 0, kIn = 1, kOut = 2 };

  bool assign(std::size_t e, char value) {
    if (state_[e] != kUnknown) return state_[e] == value;
    if (value == kIn) {
      if (in_count_ + 1 > n_ - 1) return false;
      if (!sets_.unite(static_cast<std::size_t>(g_.edge(e).u), static_cast<std::size_t>(g_.edge(e).v))) return false;
      ++in_count_;
    } else {
      if (m_ - (out_count_ + 1) < n_ - 1) return false;
      ++out_count_;
    }
    state_[e] = value;
    trail_.push_back(e);
    pending_.push_back(e);
    return true;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t e = trail_.back();
      trail_.pop_back();
      if (state_[e] == kIn) {
        sets_.undo();
        --in_count_;
      } else {
        --out_count_;
      }
      state_[e] = kUnknown;
    }
    pending_.clear();
  }

  // An excluded edge needs a triangle whose other two edges can both be in T.
  bool check_support(std::size_t e) {
    if (state_[e] != kOut) return true;
    std::size_t viable = 0, last = 0;
    for (std::size_t t : on_edge_[e]) {
      bool blocked = false;
      for (std::size_t f : triangles_[t])
        if (f != e && state_[f] == kOut) blocked = true;
      if (!blocked) {
        ++viable;
        last = t;
      }
    }
    if (viable == 0) return false;
    if (viable == 1)
      for (std::size_t f : triangles_[last])
        if (f != e && !assign(f, kIn)) return false;
    return true;
  }

  // Each triangle carries zero or two tree edges.
  bool check_triangle(std::size_t t) {
    std::size_t in = 0, out = 0, unknown = 0, free_edge = 0;
    for (std::size_t f : triangles_[t]) {
      if (state_[f] == kIn) ++in;
      else if (state_[f] == kOut) ++out;
      else {
        ++unknown;
        free_edge = f;
      }
    }
    if (in == 3 || (in == 1 && out == 2)) return false;
    if (unknown == 1) {
      if (in == 2 || out == 2) return assign(free_edge, kOut);
      if (in == 1 && out == 1) return assign(free_edge, kIn);
    }
    return true;
  }

  bool propagate() {
    while (!pending_.empty()) {
      std::size_t e = pending_.front();
      pending_.pop_front();
      if (!check_support(e)) return false;
      for (std::size_t t : on_edge_[e]) {
        if (!check_triangle(t)) return false;
        if (state_[e] == kOut)
          for (std::size_t f : triangles_[t])
            if (f != e && !check_support(f)) return false;
      }
    }
    return true;
  }

  void branch() {
    if (results_.size() >= limit_) return;
    ++nodes_;
    std::size_t e = 0;
    while (e < m_ && state_[e] != kUnknown) ++e;
    if (e == m_) {
      if (in_count_ + 1 != n_) return;
      std::vector<std::size_t> in_edges;
      for (std::size_t k = 0; k < m_; ++k)
        if (state_[k] == kIn) in_edges.push_back(k);
      SpanningTree tree = SpanningTree::canonical(g_, std::move(in_edges));
      require(verify_tree_2_spanner(g_, tree).ok, "spanner search produced a tree that fails verification");
      results_.push_back(std::move(tree));
      return;
    }
    for (char value : {kIn, kOut}) {
      std::size_t mark = trail_.size();
      if (assign(e, value) && propagate()) branch();
      undo_to(mark);
      if (results_.size() >= limit_) return;
    }
  }

  const SimplicialGraph& g_;
  std::size_t n_, m_, limit_;
  DisjointSets sets_;
  std::vector<std::array<std::size_t, 3>> triangles_;
  std::vector<std::vector<std::size_t>> on_edge_;
  std::vector<char> state_;
  std::vector<std::size_t> trail_;
  std::deque<std::size_t> pending_;
  std::size_t in_count_ = 0, out_count_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<SpanningTree> results_;
};

}  // namespace

std::optional<SpanningTree> find_tree_2_spanner(const SimplicialGraph& g, SpannerSearchStats* stats) {
  if (g.vertex_count() == 0 || !is_connected(g)) throw PreconditionError("find_tree_2_spanner requires a connected, nonempty graph");
  auto found = SpannerSearch(g, 1).run(stats);
  if (found.empty()) return std::nullopt;
  return std::move(found.front());
}

std::vector<SpanningTree> enumerate_tree_2_spanners(const SimplicialGraph& g, std::size_t limit) {
  if (g.vertex_count() == 0 || !is_connected(g))
    throw PreconditionError("enumerate_tree_2_spanners requires a connected, nonempty graph");
  return SpannerSearch(g, limit).run(nullptr);
}

// ---------------------------------------------------------------------------

DualGraph dual_graph(const SimplicialGraph& g, const SpanningTree& t) {
  auto check = verify_tree_2_spanner(g, t);
  if (!check.ok)
    throw PreconditionError("dual_graph: not a tree 2-spanner, edge " + g.edge_label(*check.violation) + " is stretched");

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& tri : graph_triangles(g)) {
    std::vector<std::size_t> in_tree;
    for (std::size_t e : tri)
      if (auto c = t.coordinate_of(e)) in_tree.push_back(*c);
    if (in_tree.size() == 2) {
      pairs.emplace(std::min(in_tree[0], in_tree[1]), std::max(in_tree[0], in_tree[1]));
    } else if (in_tree.empty()) {
      // A triangle free of tree edges spans a K4 with a tree vertex.
      const Edge& a = g.edge(tri[0]);
      const Edge& b = g.edge(tri[1]);
      Vertex x = a.u, y = a.v, z = b.u == x || b.u == y ? b.v : b.u;
      bool completed = false;
      for (Vertex w : g.neighbors(x)) {
        if (w == y || w == z || !g.adjacent(w, y) || !g.adjacent(w, z)) continue;
        if (t.contains_edge(*g.edge_index(w, x)) && t.contains_edge(*g.edge_index(w, y)) &&
            t.contains_edge(*g.edge_index(w, z)))
          completed = true;
      }
      require(completed, "triangle without tree edges has no K4 completion");
    } else {
      require(false, "triangle with an odd number of tree edges under a tree 2-spanner");
    }
  }

  DualGraph out;
  out.tree_edges = t.graph_edge_indices();
  std::vector<VertexId> ids;
  for (std::size_t k : out.tree_edges) ids.push_back(g.edge_label(g.edge(k)));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [i, j] : pairs) edges.emplace_back(ids[i], ids[j]);
  out.graph = SimplicialGraph(ids, edges);
  for (const auto& id : ids) out.vertex_of_coordinate.push_back(out.graph.vertex(id));
  out.coordinate_edges.assign(pairs.begin(), pairs.end());
  return out;
}

std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b) {
  const std::size_t n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  auto degrees = [](const SimplicialGraph& g) {
    std::vector<std::size_t> d;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) d.push_back(g.degree(static_cast<Vertex>(v)));
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return std::nullopt;

  // Visit vertices of a so that each one after the first in its component
  // has an already-mapped neighbour.
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (placed[start]) continue;
    std::deque<Vertex> queue{static_cast<Vertex>(start)};
    placed[start] = 1;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      order.push_back(x);
      for (Vertex y : a.neighbors(x))
        if (!placed[y]) {
          placed[y] = 1;
          queue.push_back(y);
        }
    }
  }

  std::vector<Vertex> map(n, -1);
  std::vector<char> used(n, 0);
  std::function<bool(std::size_t)> extend = [&](std::size_t i) {
    if (i == n) return true;
    Vertex x = order[i];
    for (std::size_t cand = 0; cand < n; ++cand) {
      Vertex y = static_cast<Vertex>(cand);
      if (used[cand] || a.degree(x) != b.degree(y)) continue;
      bool consistent = true;
      for (std::size_t j = 0; j < i && consistent; ++j) {
        Vertex px = order[j];
        consistent = a.adjacent(x, px) == b.adjacent(y, map[px]);
      }
      if (!consistent) continue;
      map[x] = y;
      used[cand] = 1;
      if (extend(i + 1)) return true;
      used[cand] = 0;
      map[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

bool graphs_define_isomorphic_bbgs(const SimplicialGraph& g1, const SpanningTree& t1, const SimplicialGraph& g2,
                                   const SpanningTree& t2) {
  return are_isomorphic(dual_graph(g1, t1).graph, dual_graph(g2, t2).graph);
}

// ---------------------------------------------------------------------------

namespace {

std::string describe(const SimplicialGraph& g, const Simplex& s) {
  std::string text = "{";
  for (std::size_t i = 0; i < s.size(); ++i) text += (i ? "," : "") + g.id(s[i]);
  return text + "}";
}

// Fan {v} * path: returns the path order of the link, or nothing.
std::optional<std::vector<Vertex>> link_path(const SimplicialGraph& g, const VertexSet& piece, Vertex v) {
  VertexSet link;
  for (Vertex w : piece)
    if (w != v && g.adjacent(v, w)) link.push_back(w);
  if (link.size() + 1 != piece.size() || link.size() < 2) return std::nullopt;
  auto degree_in_link = [&](Vertex w) {
    return std::count_if(link.begin(), link.end(), [&](Vertex x) { return g.adjacent(w, x); });
  };
  std::vector<Vertex> ends;
  for (Vertex w : link) {
    auto d = degree_in_link(w);
    if (d == 1) ends.push_back(w);
    else if (d != 2) return std::nullopt;
  }
  if (ends.size() != 2) return std::nullopt;
  std::vector<Vertex> path{ends.front()};
  while (path.size() < link.size()) {
    Vertex last = path.back();
    Vertex next = -1;
    for (Vertex x : link)
      if (g.adjacent(last, x) && (path.size() < 2 || x != path[path.size() - 2])) next = x;
    if (next < 0) return std::nullopt;
    path.push_back(next);
  }
  if (path.back() != ends.back()) return std::nullopt;
  return path;
}

struct Decomposer {
  const SimplicialGraph& g;
  std::vector<Piece> pieces;
  std::set<std::size_t> bonds;

  bool run(const VertexSet& s) {
    // Cut edge: an edge whose two endpoints together separate the piece.
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (!g.adjacent(s[i], s[j])) continue;
        VertexSet rest = set_difference(s, {s[i], s[j]});
        auto comps = components(g, rest);
        if (comps.size() < 2) continue;
        bonds.insert(*g.edge_index(s[i], s[j]));
        for (auto& comp : comps)
          if (!run(set_union(comp, {s[i], s[j]}))) return false;
        return true;
      }
    Subgraph sub = Subgraph::full(g, s);
    if (s.size() == 3 && sub.edges().size() == 3) {
      pieces.push_back({PieceKind::kFan, sub, s.front()});
      return true;
    }
    // Otherwise the piece must be the star of its interior vertex.
    for (Vertex u : s) {
      std::size_t deg = 0;
      for (Vertex w : s)
        if (w != u && g.adjacent(u, w)) ++deg;
      if (deg + 1 != s.size()) continue;
      VertexSet base = set_difference(s, {u});
      bool triangle_free = true, no_leaf = true;
      for (Vertex a : base) {
        std::size_t d = 0;
        for (Vertex b : base)
          if (g.adjacent(a, b)) {
            ++d;
            for (Vertex c : base)
              if (c > b && g.adjacent(a, c) && g.adjacent(b, c)) triangle_free = false;
          }
        if (d < 2) no_leaf = false;
      }
      if (triangle_free && no_leaf) {
        pieces.push_back({PieceKind::kSimpleCone, sub, u});
        return true;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<FanConeDecomposition> decompose_fans_cones(const FlagComplex& fc) {
  const SimplicialGraph& g = fc.base();
  if (fc.dimension() != 2) throw PreconditionError("decompose_fans_cones requires a 2-dimensional flag complex");
  if (!is_biconnected(g).biconnected) throw PreconditionError("decompose_fans_cones requires a biconnected graph");
  if (simple_connectivity(fc).verdict != Connectivity::kSimplyConnected)
    throw HypothesisError("decompose_fans_cones: simple connectivity is not certified");
  auto crowned = crowned_triangles(fc);
  if (!crowned.empty())
    throw PreconditionError("decompose_fans_cones: crowned triangle " + describe(g, crowned.front()));

  // With no crowned triangles there are no interior triangles or edges and at
  // most one interior vertex.
  auto boundary = classify_boundary(fc);
  require(boundary.interior_edges.empty(), "interior edge in a complex without crowned triangles");
  require(boundary.interior_vertices.size() <= 1, "several interior vertices in a complex without crowned triangles");

  Decomposer d{g, {}, {}};
  if (!d.run(g.all_vertices())) return std::nullopt;

  FanConeDecomposition out;
  out.pieces = std::move(d.pieces);
  out.bonding_edges.assign(d.bonds.begin(), d.bonds.end());
  // A triangle's cone vertex is where its bonding edges meet, if anywhere.
  for (auto& piece : out.pieces) {
    if (piece.kind != PieceKind::kFan || piece.subgraph.vertices().size() != 3) continue;
    std::vector<Edge> bonded;
    for (std::size_t e : piece.subgraph.edges())
      if (d.bonds.count(e)) bonded.push_back(g.edge(e));
    if (bonded.size() == 2)
      piece.cone_vertex = (bonded[0].u == bonded[1].u || bonded[0].u == bonded[1].v) ? bonded[0].u : bonded[0].v;
    else if (bonded.size() == 1)
      piece.cone_vertex = bonded[0].u;
  }
  for (std::size_t e : out.bonding_edges)
    for (const auto& piece : out.pieces)
      if (piece.subgraph.contains_edge(e)) require(is_good_edge(piece, e), "bonding along a bad edge");
  return out;
}

bool is_good_edge(const Piece& piece, std::size_t graph_edge) {
  const SimplicialGraph& g = piece.subgraph.parent();
  if (!piece.subgraph.contains_edge(graph_edge)) return false;
  const Edge& e = g.edge(graph_edge);
  if (e.u == piece.cone_vertex || e.v == piece.cone_vertex) return true;
  if (piece.kind == PieceKind::kSimpleCone) return false;
  auto path = link_path(g, piece.subgraph.vertices(), piece.cone_vertex);
  if (!path) return false;
  const auto& p = *path;
  Edge first{std::min(p[0], p[1]), std::max(p[0], p[1])};
  Edge last{std::min(p[p.size() - 2], p.back()), std::max(p[p.size() - 2], p.back())};
  return e == first || e == last;
}

SpanningTree spanner_from_decomposition(const SimplicialGraph& g, const FanConeDecomposition& d) {
  std::set<std::size_t> tree;
  auto is_bond = [&](std::size_t e) { return std::binary_search(d.bonding_edges.begin(), d.bonding_edges.end(), e); };
  for (const Piece& piece : d.pieces) {
    const VertexSet& vs = piece.subgraph.vertices();
    if (piece.kind == PieceKind::kSimpleCone) {
      for (Vertex w : vs)
        if (w != piece.cone_vertex) tree.insert(*g.edge_index(piece.cone_vertex, w));
      continue;
    }
    auto path = link_path(g, vs, piece.cone_vertex);
    require(path.has_value(), "fan piece without a path link");
    const auto& p = *path;
    const Vertex v = piece.cone_vertex;
    if (p.size() == 2) {
      // A single triangle: keep every bonding edge, then fill from the spokes.
      std::vector<std::size_t> bonded;
      for (std::size_t e : piece.subgraph.edges())
        if (is_bond(e)) bonded.push_back(e);
      require(bonded.size() <= 2, "triangle bonded along all three edges");
      if (bonded.size() == 2) {
        tree.insert(bonded.begin(), bonded.end());
      } else if (bonded.size() == 1) {
        const Edge& b = g.edge(bonded.front());
        Vertex third = vs[0] != b.u && vs[0] != b.v ? vs[0] : (vs[1] != b.u && vs[1] != b.v ? vs[1] : vs[2]);
        tree.insert(bonded.front());
        tree.insert(*g.edge_index(b.u, third));
      } else {
        tree.insert(*g.edge_index(v, p[0]));
        tree.insert(*g.edge_index(v, p[1]));
      }
      continue;
    }
    // Inner spokes, then one edge from each peripheral triangle; a bonded
    // edge wins, otherwise the peripheral spoke.
    for (std::size_t i = 1; i + 1 < p.size(); ++i) tree.insert(*g.edge_index(v, p[i]));
    for (auto [end, inner] : {std::pair{p.front(), p[1]}, std::pair{p.back(), p[p.size() - 2]}}) {
      std::size_t modified = *g.edge_index(end, inner);
      tree.insert(is_bond(modified) ? modified : *g.edge_index(v, end));
    }
  }
  SpanningTree t = SpanningTree::canonical(g, {tree.begin(), tree.end()});
  auto check = verify_tree_2_spanner(g, t);
  require(check.ok, "glued fan/cone trees do not form a tree 2-spanner");
  return t;
}

const char* to_string(PieceKind kind) { return kind == PieceKind::kFan ? "FAN" : "SIMPLE_CONE"; }

}  // namespace bbg
