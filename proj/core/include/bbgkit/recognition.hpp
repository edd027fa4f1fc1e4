#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bbgkit/bns.hpp"
#include "bbgkit/flag_complex.hpp"
#include "bbgkit/graph.hpp"
#include "bbgkit/spanner.hpp"
#include "bbgkit/subspace.hpp"

namespace bbg {

// A triangle (v1, v2, v3) with minimal full separators lambda[j] inside the
// link of v[j], each containing the opposite edge e[j], whose vertex sets
// have empty common intersection. `tree` is adapted to the triangle: its
// first two coordinates are e1 = (v3 -> v2) and e2 = (v3 -> v1).
struct RedundantTriangleWitness {
  SimplicialGraph graph;
  std::array<Vertex, 3> v{};
  std::array<Edge, 3> e{};
  std::array<Subgraph, 3> lambda;
  SpanningTree tree;
  std::array<RationalSubspace, 3> w;
  RedundantTripleReport report;
};

// Builds the adapted tree and the triple for the given separators. Throws
// InputError when the separators do not satisfy the definition.
RedundantTriangleWitness build_redundant_triangle_witness(const SimplicialGraph& g, std::array<Vertex, 3> v,
                                                          const std::array<VertexSet, 3>& lambda);

struct TriangleTriple {
  SpanningTree tree;  // adapted as in RedundantTriangleWitness
  std::array<RationalSubspace, 3> w;
  RedundantTripleReport report;
};

// Adapted coordinates and missing subspaces for separators lambda[j] inside
// the links through the opposite edges. Unlike a witness, the separators may
// share vertices, in which case the triple can fail to be redundant.
TriangleTriple triangle_triple(const SimplicialGraph& g, const std::array<Vertex, 3>& v,
                               const std::array<Subgraph, 3>& lambda);

// Minimal full separators inside lk(v[j]) containing the edge opposite v[j],
// for j = 0, 1, 2, each ordered by size then lexicographically.
std::array<std::vector<Subgraph>, 3> triangle_candidates(const SimplicialGraph& g,
                                                         const std::vector<Subgraph>& separators,
                                                         const std::array<Vertex, 3>& v);

struct WitnessCheck {
  bool ok = false;
  std::string failure;
};

// Rechecks every field from the graph alone.
WitnessCheck verify_redundant_triangle_witness(const RedundantTriangleWitness& w);

// Triangles in lexicographic order, separators by size then lex. Requires a
// biconnected graph with certified simply connected flag complex
// (HypothesisError otherwise).
std::optional<RedundantTriangleWitness> find_redundant_triangle(const SimplicialGraph& g,
                                                               const CollapseOptions& options = {});

struct CrownedRedundancy {
  Simplex triangle;
  RedundantTriangleWitness witness;
};

// For a 2-dimensional complex, a redundant-triangle witness for every crowned
// triangle; a crowned triangle without one raises InvariantViolation.
std::vector<CrownedRedundancy> crowned_implies_redundant_dim2(const FlagComplex& fc,
                                                              const CollapseOptions& options = {});

enum class Verdict { kRaag, kNotRaagNotArtin, kNotFinitelyPresented, kUnknown, kNotApplicable };

struct RaagCertificate {
  SpanningTree tree;
  DualGraph dual;
};

struct RecognitionVerdict {
  Verdict status = Verdict::kUnknown;
  SimplicialGraph graph;
  std::optional<RaagCertificate> raag;
  std::optional<RedundantTriangleWitness> witness;
  std::optional<SimpleConnectivityStatus> connectivity;
  std::string note;
  // Blocks of a connected graph, or components of a disconnected one.
  std::vector<RecognitionVerdict> parts;
};

RecognitionVerdict recognize(const SimplicialGraph& g, const CollapseOptions& options = {});

// The first resonance variety of B(G) coincides with the span arrangement of
// the complement of its BNS invariant.
std::vector<RationalSubspace> resonance_arrangement(const SimplicialGraph& g, const SpanningTree& t,
                                                    const CollapseOptions& options = {});

const char* to_string(Verdict v);

}  // namespace bbg
