#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbgkit/flag_complex.hpp"
#include "bbgkit/graph.hpp"

namespace bbg {

// A spanning tree with a recorded orientation and coordinate order: the
// k-th oriented edge is coordinate y_{k+1} for characters.
class SpanningTree {
 public:
  SpanningTree() = default;

  // Validates that the edges exist in `parent`, number |V|-1, and span.
  SpanningTree(SimplicialGraph parent, std::vector<OrientedEdge> edges);

  // Tail is the smaller vertex; coordinates follow graph edge order.
  static SpanningTree canonical(SimplicialGraph parent, std::vector<std::size_t> edge_indices);
  static SpanningTree from_ids(SimplicialGraph parent, const std::vector<std::pair<VertexId, VertexId>>& edges);

  const SimplicialGraph& parent() const { return parent_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<OrientedEdge>& edges() const { return edges_; }
  const OrientedEdge& edge(std::size_t coordinate) const { return edges_.at(coordinate); }
  std::vector<std::size_t> graph_edge_indices() const;  // in coordinate order

  std::optional<std::size_t> coordinate_of(std::size_t graph_edge) const;
  bool contains_edge(std::size_t graph_edge) const { return coordinate_of(graph_edge).has_value(); }

  std::vector<Vertex> path(Vertex from, Vertex to) const;
  std::size_t distance(Vertex a, Vertex b) const { return path(a, b).size() - 1; }

  // Coefficients c with chi(from -> to) = sum_k c_k y_k: +1 when the path
  // traverses coordinate k along its orientation, -1 against it.
  std::vector<int> path_coefficients(Vertex from, Vertex to) const;

  std::vector<std::pair<VertexId, VertexId>> oriented_ids() const;

 private:
  SimplicialGraph parent_;
  std::vector<OrientedEdge> edges_;
  std::vector<std::int32_t> coordinate_;  // per graph edge, -1 if absent
  std::vector<Vertex> up_;                // parent pointer, rooted at vertex 0
  std::vector<std::int32_t> up_coordinate_;
  std::vector<std::int32_t> depth_;
};

struct SpannerCheck {
  bool ok = false;
  std::optional<Edge> violation;  // an edge whose endpoints are at tree distance > 2
};

// Checks d_T(x,y) <= 2 on edges, which suffices for all pairs.
SpannerCheck verify_tree_2_spanner(const SimplicialGraph& g, const SpanningTree& t);

struct SpannerSearchStats {
  std::uint64_t nodes = 0;
};

// Exhaustive search with propagation; returns the first tree 2-spanner in the
// canonical branching order, or nothing. Requires g connected.
std::optional<SpanningTree> find_tree_2_spanner(const SimplicialGraph& g, SpannerSearchStats* stats = nullptr);

// Every tree 2-spanner, stopping after `limit` results.
std::vector<SpanningTree> enumerate_tree_2_spanners(const SimplicialGraph& g, std::size_t limit = 1000);

struct DualGraph {
  SimplicialGraph graph;  // vertex ids are the tree edge labels "a-b"
  std::vector<std::size_t> tree_edges;  // graph edge index of each tree coordinate
  std::vector<Vertex> vertex_of_coordinate;
  std::vector<std::pair<std::size_t, std::size_t>> coordinate_edges;  // (i,j), i<j, sorted
};

// Requires t to be a tree 2-spanner of g (PreconditionError otherwise).
DualGraph dual_graph(const SimplicialGraph& g, const SpanningTree& t);

// Backtracking isomorphism test; returns the vertex map a -> b when found.
std::optional<std::vector<Vertex>> find_isomorphism(const SimplicialGraph& a, const SimplicialGraph& b);
inline bool are_isomorphic(const SimplicialGraph& a, const SimplicialGraph& b) {
  return find_isomorphism(a, b).has_value();
}

bool graphs_define_isomorphic_bbgs(const SimplicialGraph& g1, const SpanningTree& t1, const SimplicialGraph& g2,
                                   const SpanningTree& t2);

enum class PieceKind { kFan, kSimpleCone };

struct Piece {
  PieceKind kind = PieceKind::kFan;
  Subgraph subgraph;
  Vertex cone_vertex = 0;
};

struct FanConeDecomposition {
  std::vector<Piece> pieces;
  std::vector<std::size_t> bonding_edges;  // graph edge indices, sorted
};

// Splits along cut edges (edges whose endpoints together separate) until
// every piece is a triangle or a simple cone. Requires dimension 2, a
// biconnected base and certified simple connectivity; a crowned triangle is
// reported as a PreconditionError naming it. Returns nothing if a piece fails
// to be a fan or simple cone.
std::optional<FanConeDecomposition> decompose_fans_cones(const FlagComplex& fc);

// Good edges of a piece: spokes, plus the modified-peripheral edges of a fan.
bool is_good_edge(const Piece& piece, std::size_t graph_edge);

// Glues per-piece trees (spokes plus peripheral choices) into a tree
// 2-spanner of the whole graph, verified before returning.
SpanningTree spanner_from_decomposition(const SimplicialGraph& g, const FanConeDecomposition& d);

const char* to_string(PieceKind kind);

}  // namespace bbg
