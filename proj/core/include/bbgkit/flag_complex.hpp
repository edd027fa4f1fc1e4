#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bbgkit/graph.hpp"
#include "bbgkit/linalg.hpp"
#include "bbgkit/rational.hpp"

namespace bbg {

using Simplex = std::vector<Vertex>;  // sorted vertex indices

// The clique complex of a graph. Level k holds the k-simplices, i.e. the
// (k+1)-cliques, in lexicographic order; level 1 is in graph edge order.
class FlagComplex {
 public:
  FlagComplex() = default;
  explicit FlagComplex(SimplicialGraph base, std::optional<std::size_t> max_dim = std::nullopt);

  const SimplicialGraph& base() const { return base_; }
  int dimension() const { return static_cast<int>(levels_.size()) - 1; }
  bool truncated() const { return truncated_; }

  std::size_t level_count() const { return levels_.size(); }
  const std::vector<Simplex>& level(std::size_t k) const;
  const std::vector<Simplex>& triangles() const { return level(2); }
  std::size_t count(std::size_t k) const { return k < levels_.size() ? levels_[k].size() : 0; }

  std::optional<std::size_t> find(const Simplex& s) const;
  // Indices of the triangles containing the given edge.
  const std::vector<std::size_t>& triangles_on_edge(std::size_t edge) const;

  long long euler_characteristic() const;

 private:
  SimplicialGraph base_;
  std::vector<std::vector<Simplex>> levels_;
  std::vector<std::map<Simplex, std::size_t>> index_;
  std::vector<std::vector<std::size_t>> edge_triangles_;
  bool truncated_ = false;
};

FlagComplex build_flag_complex(const SimplicialGraph& g, std::optional<std::size_t> max_dim = std::nullopt);

struct BoundaryClassification {
  std::vector<std::size_t> boundary_edges;  // in exactly one triangle
  std::vector<std::size_t> interior_edges;  // no endpoint on the boundary
  VertexSet boundary_vertices;
  VertexSet interior_vertices;
};

// Requires dimension exactly 2 (PreconditionError otherwise).
BoundaryClassification classify_boundary(const FlagComplex& fc);

// Integer boundary map from k-chains to (k-1)-chains: rows are (k-1)-simplices.
IntegerMatrix boundary_matrix(const FlagComplex& fc, std::size_t k);

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;  // elementary divisors greater than one
  bool trivial() const { return rank == 0 && torsion.empty(); }
};

HomologyGroup homology(const FlagComplex& fc, std::size_t k);
inline HomologyGroup homology_h1(const FlagComplex& fc) { return homology(fc, 1); }

enum class Connectivity { kSimplyConnected, kNotSimplyConnected, kUnknown };

struct CollapseStep {
  Simplex face;
  Simplex coface;
};

struct SimpleConnectivityStatus {
  HomologyGroup h1;
  Connectivity verdict = Connectivity::kUnknown;
  // SIMPLY_CONNECTED: elementary collapses down to the vertex `survivor`.
  std::vector<CollapseStep> collapse;
  std::optional<Vertex> survivor;
  // NOT_SIMPLY_CONNECTED: closed walk whose class in H1 is nonzero.
  std::vector<Vertex> cycle;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;
};

struct CollapseOptions {
  std::size_t restarts = 10;  // randomized attempts after the deterministic one
  std::uint64_t seed = 0;
};

// Requires a connected base graph (PreconditionError otherwise).
SimpleConnectivityStatus simple_connectivity(const FlagComplex& fc, const CollapseOptions& options = {});

const char* to_string(Connectivity c);

}  // namespace bbg

namespace bbg {

// Triangles none of whose edges lies in exactly one triangle. For complexes of
// dimension above two this reads the definition on the 2-skeleton.
// Requires dimension >= 2.
std::vector<Simplex> crowned_triangles(const FlagComplex& fc);

}  // namespace bbg
