#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bbgkit/flag_complex.hpp"
#include "bbgkit/graph.hpp"
#include "bbgkit/rational.hpp"
#include "bbgkit/spanner.hpp"
#include "bbgkit/subspace.hpp"

namespace bbg {

// Homomorphism A(G) -> Q given by a label per vertex (indexed by Vertex).
struct RaagCharacter {
  SimplicialGraph graph;
  std::vector<Rational> labels;

  bool is_zero() const;
};

// Homomorphism B(G) -> Q given by its values on the oriented tree edges, in
// coordinate order.
struct BbgCharacter {
  SpanningTree tree;
  std::vector<Rational> values;

  BbgCharacter() = default;
  BbgCharacter(SpanningTree t, std::vector<Rational> v);
  const SimplicialGraph& graph() const { return tree.parent(); }
  bool is_zero() const;
  BbgCharacter negated() const;
};

// Value on any oriented edge of the graph (InputError if it is not an edge).
Rational evaluate(const BbgCharacter& chi, const OrientedEdge& e);

// r(chi^)(e) = chi^(head) - chi^(tail) on every tree edge.
BbgCharacter restrict_character(const RaagCharacter& chi, const SpanningTree& t);

// The unique extension with chi^(base) = base_value. Requires connectivity.
RaagCharacter extend(const BbgCharacter& chi, Vertex base, const Rational& base_value);

// The extension orthogonal to the constant labelling.
RaagCharacter section(const BbgCharacter& chi);

// Matrix of r: rows are tree coordinates, columns are vertices.
RationalMatrix restriction_matrix(const SpanningTree& t);

// Living subgraph connected and dominating. Requires a connected graph and a
// nonzero character (PreconditionError otherwise).
bool raag_sigma_membership(const RaagCharacter& chi);

struct EdgeVanishing {
  std::vector<std::size_t> living;  // graph edge indices, sorted
  std::vector<std::size_t> dead;
};

EdgeVanishing dead_edge_subgraph(const BbgCharacter& chi);

struct MissingSubsphere {
  Subgraph separator;
  RationalSubspace subspace;  // characters vanishing on every separator edge
  IntegerMatrix equations;    // primitive integer rows in tree coordinates, sorted
};

enum class Membership { kInSigma, kNotInSigma, kNotApplicable };

struct MembershipResult {
  Membership status = Membership::kNotApplicable;
  std::optional<Subgraph> dead_separator;  // set when NOT_IN_SIGMA
  std::string note;                        // reason when NOT_APPLICABLE
};

// Certified hypotheses and the minimal full separators of one graph, reused
// across many characters.
class BnsModel {
 public:
  BnsModel(const SimplicialGraph& g, const CollapseOptions& options = {});

  const SimplicialGraph& graph() const { return graph_; }
  bool applicable() const { return applicable_; }
  const std::string& note() const { return note_; }
  const SimpleConnectivityStatus& connectivity() const { return connectivity_; }
  const std::vector<Subgraph>& separators() const { return separators_; }

  // Some minimal full separator has all its edges dead; returns it.
  std::optional<Subgraph> dead_separator(const BbgCharacter& chi) const;
  // Every extension of chi lies in the RAAG invariant (finitely many checks).
  bool member_by_extensions(const BbgCharacter& chi) const;

  // Runs both tests and requires them to agree.
  MembershipResult membership(const BbgCharacter& chi) const;
  // Throws HypothesisError when not applicable.
  std::vector<MissingSubsphere> arrangement(const SpanningTree& t) const;

 private:
  void require_applicable(const char* what) const;
  void require_nonzero(const BbgCharacter& chi) const;

  SimplicialGraph graph_;
  bool applicable_ = false;
  std::string note_;
  SimpleConnectivityStatus connectivity_;
  std::vector<Subgraph> separators_;
};

MembershipResult bbg_sigma_membership(const BbgCharacter& chi, const CollapseOptions& options = {});
std::vector<MissingSubsphere> bns_complement_arrangement(const SimplicialGraph& g, const SpanningTree& t,
                                                         const CollapseOptions& options = {});

// chi(e_k) = 10^k on the k-th tree coordinate (k from 1); dead-edge free.
BbgCharacter fibering_character(const SimplicialGraph& g, const SpanningTree& t,
                                const CollapseOptions& options = {});

const char* to_string(Membership m);

}  // namespace bbg
