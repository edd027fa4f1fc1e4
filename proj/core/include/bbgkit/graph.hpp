#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bbg {

using VertexId = std::string;
using Vertex = int;                   // index into the lexicographically sorted id list
using VertexSet = std::vector<Vertex>;  // always sorted ascending, no duplicates

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

struct OrientedEdge {
  Vertex tail = 0;
  Vertex head = 0;
  OrientedEdge reversed() const { return {head, tail}; }
  Edge unoriented() const { return tail < head ? Edge{tail, head} : Edge{head, tail}; }
  auto operator<=>(const OrientedEdge&) const = default;
};

// Finite simple graph with opaque string vertex ids. Vertices are indexed in
// lexicographic id order and edges are kept sorted, so every enumeration in
// the library is deterministic. Copies share the immutable representation.
class SimplicialGraph {
 public:
  SimplicialGraph();

  // Validates: no loops, no repeated edges, every endpoint declared, ids unique.
  SimplicialGraph(std::vector<VertexId> vertices, const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t vertex_count() const;
  std::size_t edge_count() const;

  const std::vector<VertexId>& ids() const;
  const VertexId& id(Vertex v) const;
  std::optional<Vertex> find(const VertexId& id) const;
  Vertex vertex(const VertexId& id) const;  // throws InputError when unknown

  const std::vector<Edge>& edges() const;
  const Edge& edge(std::size_t index) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  std::size_t edge_index_checked(Vertex a, Vertex b) const;  // throws InputError

  bool adjacent(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;  // sorted
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  VertexSet all_vertices() const;

  // Identity of the shared representation; cheap check that two handles
  // refer to the same graph value.
  bool shares_representation(const SimplicialGraph& other) const { return impl_ == other.impl_; }
  bool operator==(const SimplicialGraph& other) const;

  std::string edge_label(const Edge& e) const;  // "a-b"

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// A subgraph of a parent graph; edges are referenced by parent edge index.
class Subgraph {
 public:
  Subgraph() = default;
  Subgraph(SimplicialGraph parent, VertexSet vertices, std::vector<std::size_t> edges);

  static Subgraph full(const SimplicialGraph& parent, VertexSet vertices);
  static Subgraph spanned_by_edges(const SimplicialGraph& parent, std::vector<std::size_t> edges);

  const SimplicialGraph& parent() const { return parent_; }
  const VertexSet& vertices() const { return vertices_; }
  const std::vector<std::size_t>& edges() const { return edges_; }
  bool is_full() const { return is_full_; }
  bool contains_vertex(Vertex v) const;
  bool contains_edge(std::size_t edge_index) const;

  // Standalone graph on the same ids (used for recursion into pieces).
  SimplicialGraph as_graph() const;
  std::vector<VertexId> vertex_ids() const;

  bool operator==(const Subgraph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  SimplicialGraph parent_;
  VertexSet vertices_;
  std::vector<std::size_t> edges_;  // sorted
  bool is_full_ = false;
};

VertexSet make_vertex_set(std::vector<Vertex> vs);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
bool contains(const VertexSet& s, Vertex v);

Subgraph link(const SimplicialGraph& g, Vertex v);
Subgraph star(const SimplicialGraph& g, Vertex v);

// Connected components of the full subgraph on `within`, each sorted, listed
// in order of their smallest vertex.
std::vector<VertexSet> components(const SimplicialGraph& g, const VertexSet& within);
std::vector<VertexSet> components(const SimplicialGraph& g);
bool is_connected(const SimplicialGraph& g);

struct Biconnectivity {
  bool biconnected = false;
  std::optional<Vertex> cut_vertex;
};

// Requires g connected with at least two vertices (PreconditionError otherwise).
Biconnectivity is_biconnected(const SimplicialGraph& g);
std::vector<Vertex> articulation_points(const SimplicialGraph& g);

// Blocks of a connected graph, each a full subgraph, ordered by vertex list.
std::vector<Subgraph> biconnected_components(const SimplicialGraph& g);

// s must be a proper subset of the vertices (InputError otherwise).
bool is_separating(const SimplicialGraph& g, const VertexSet& s);

// A separating set is inclusion-minimal iff every vertex of it has a
// neighbour in every component of the complement.
bool is_minimal_separating(const SimplicialGraph& g, const VertexSet& s);

enum class SeparatorMethod { kExpansion, kExhaustive };

struct SeparatorOptions {
  SeparatorMethod method = SeparatorMethod::kExpansion;
  std::size_t exhaustive_limit = 12;  // kExhaustive refuses larger graphs
};

// Inclusion-minimal separating vertex sets as full subgraphs, ordered by size
// then lexicographically. Requires g connected with at least three vertices.
std::vector<Subgraph> minimal_full_separating_subgraphs(const SimplicialGraph& g,
                                                       const SeparatorOptions& options = {});

// All minimal a-b separators for all pairs a, b (close-separator expansion).
std::vector<VertexSet> all_minimal_pair_separators(const SimplicialGraph& g);

}  // namespace bbg
