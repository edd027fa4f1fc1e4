#include "bbgkit/bns.hpp"

#include <algorithm>

#include "bbgkit/error.hpp"

namespace bbg {

bool RaagCharacter::is_zero() const {
  return std::all_of(labels.begin(), labels.end(), [](const Rational& x) { return x == 0; });
}

BbgCharacter::BbgCharacter(SpanningTree t, std::vector<Rational> v) : tree(std::move(t)), values(std::move(v)) {
  if (values.size() != tree.size())
    throw InputError("character has " + std::to_string(values.size()) + " values but the tree has " +
                     std::to_string(tree.size()) + " edges");
}

bool BbgCharacter::is_zero() const {
  return std::all_of(values.begin(), values.end(), [](const Rational& x) { return x == 0; });
}

BbgCharacter BbgCharacter::negated() const {
  BbgCharacter out = *this;
  for (auto& x : out.values) x = -x;
  return out;
}

Rational evaluate(const BbgCharacter& chi, const OrientedEdge& e) {
  const SimplicialGraph& g = chi.graph();
  if (!g.edge_index(e.tail, e.head))
    throw InputError("evaluate: " + g.id(e.tail) + "-" + g.id(e.head) + " is not an edge");
  auto coefficients = chi.tree.path_coefficients(e.tail, e.head);
  Rational total = 0;
  for (std::size_t k = 0; k < coefficients.size(); ++k)
    if (coefficients[k] != 0) total += coefficients[k] * chi.values[k];
  return total;
}

BbgCharacter restrict_character(const RaagCharacter& chi, const SpanningTree& t) {
  if (!(chi.graph == t.parent())) throw InputError("restrict: tree belongs to another graph");
  std::vector<Rational> values;
  for (const auto& e : t.edges()) {
    Rational head = chi.labels.at(static_cast<std::size_t>(e.head));
    values.push_back(head - chi.labels.at(static_cast<std::size_t>(e.tail)));
  }
  return BbgCharacter(t, std::move(values));
}

RaagCharacter extend(const BbgCharacter& chi, Vertex base, const Rational& base_value) {
  const SimplicialGraph& g = chi.graph();
  if (!is_connected(g)) throw PreconditionError("extend requires a connected graph");
  RaagCharacter out{g, std::vector<Rational>(g.vertex_count())};
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    Rational total = base_value;
    auto coefficients = chi.tree.path_coefficients(base, v);
    for (std::size_t k = 0; k < coefficients.size(); ++k)
      if (coefficients[k] != 0) total += coefficients[k] * chi.values[k];
    out.labels[static_cast<std::size_t>(v)] = total;
  }
  return out;
}

RaagCharacter section(const BbgCharacter& chi) {
  RaagCharacter out = extend(chi, 0, 0);
  Rational mean = 0;
  for (const auto& x : out.labels) mean += x;
  mean /= static_cast<long>(out.labels.size());
  for (auto& x : out.labels) x -= mean;
  return out;
}

RationalMatrix restriction_matrix(const SpanningTree& t) {
  RationalMatrix m;
  for (const auto& e : t.edges()) {
    RationalVector row(t.parent().vertex_count(), Rational(0));
    row[static_cast<std::size_t>(e.head)] = 1;
    row[static_cast<std::size_t>(e.tail)] = -1;
    m.push_back(std::move(row));
  }
  return m;
}

bool raag_sigma_membership(const RaagCharacter& chi) {
  const SimplicialGraph& g = chi.graph;
  if (chi.labels.size() != g.vertex_count()) throw InputError("character needs one label per vertex");
  if (g.vertex_count() == 0 || !is_connected(g))
    throw PreconditionError("raag_sigma_membership requires a connected graph");
  if (chi.is_zero()) throw PreconditionError("raag_sigma_membership: zero character");
  VertexSet living;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v)
    if (chi.labels[static_cast<std::size_t>(v)] != 0) living.push_back(v);
  if (components(g, living).size() != 1) return false;
  for (Vertex v = 0; v < static_cast<Vertex>(g.vertex_count()); ++v) {
    if (contains(living, v)) continue;
    const auto& nb = g.neighbors(v);
    if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return contains(living, w); })) return false;
  }
  return true;
}

EdgeVanishing dead_edge_subgraph(const BbgCharacter& chi) {
  const SimplicialGraph& g = chi.graph();
  EdgeVanishing out;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    (evaluate(chi, {e.u, e.v}) == 0 ? out.dead : out.living).push_back(k);
  }
  return out;
}

BnsModel::BnsModel(const SimplicialGraph& g, const CollapseOptions& options) : graph_(g) {
  if (g.vertex_count() < 2 || !is_connected(g)) {
    note_ = "graph must be connected with at least two vertices";
    return;
  }
  auto bc = is_biconnected(g);
  if (!bc.biconnected) {
    note_ = "graph is not biconnected";
    if (bc.cut_vertex) note_ += " (cut vertex " + g.id(*bc.cut_vertex) + ")";
    return;
  }
  connectivity_ = simple_connectivity(build_flag_complex(g), options);
  if (connectivity_.verdict != Connectivity::kSimplyConnected) {
    note_ = std::string("simple connectivity not certified (") + to_string(connectivity_.verdict) + ")";
    return;
  }
  applicable_ = true;
  if (g.vertex_count() >= 3) separators_ = minimal_full_separating_subgraphs(g);
  for (const auto& s : separators_)
    require(s.vertices().size() >= 2 && components(g, s.vertices()).size() == 1,
            "minimal separator is not connected with at least two vertices");
}

void BnsModel::require_applicable(const char* what) const {
  if (!applicable_) throw HypothesisError(std::string(what) + ": " + note_);
}

void BnsModel::require_nonzero(const BbgCharacter& chi) const {
  if (!(chi.graph() == graph_)) throw InputError("character belongs to another graph");
  if (chi.is_zero()) throw PreconditionError("zero character has no class on the sphere");
}

std::optional<Subgraph> BnsModel::dead_separator(const BbgCharacter& chi) const {
  require_applicable("bbg_sigma_membership");
  require_nonzero(chi);
  EdgeVanishing v = dead_edge_subgraph(chi);
  for (const auto& s : separators_)
    if (std::includes(v.dead.begin(), v.dead.end(), s.edges().begin(), s.edges().end())) return s;
  return std::nullopt;
}

// Between consecutive critical constants every label of chi^0 + c is nonzero,
// so the living subgraph is everything; only c = -chi^0(v) can fail.
bool BnsModel::member_by_extensions(const BbgCharacter& chi) const {
  require_applicable("bbg_sigma_membership");
  require_nonzero(chi);
  RaagCharacter base = extend(chi, 0, 0);
  std::vector<Rational> constants;
  Rational bound = 0;
  for (const auto& x : base.labels) {
    constants.push_back(-x);
    bound = std::max<Rational>(bound, abs(x));
  }
  constants.push_back(bound + 1);
  std::sort(constants.begin(), constants.end());
  constants.erase(std::unique(constants.begin(), constants.end()), constants.end());
  for (const auto& c : constants) {
    RaagCharacter shifted = base;
    for (auto& x : shifted.labels) x += c;
    if (!raag_sigma_membership(shifted)) return false;
  }
  return true;
}

MembershipResult BnsModel::membership(const BbgCharacter& chi) const {
  MembershipResult out;
  if (!applicable_) {
    out.note = note_;
    return out;
  }
  out.dead_separator = dead_separator(chi);
  bool by_extensions = member_by_extensions(chi);
  require(by_extensions == !out.dead_separator.has_value(),
          "separator test and extension sweep disagree on a character");
  out.status = by_extensions ? Membership::kInSigma : Membership::kNotInSigma;
  return out;
}

std::vector<MissingSubsphere> BnsModel::arrangement(const SpanningTree& t) const {
  require_applicable("bns_complement_arrangement");
  if (!(t.parent() == graph_)) throw InputError("tree belongs to another graph");
  const std::size_t m = t.size();
  std::vector<MissingSubsphere> out;
  for (const auto& s : separators_) {
    RationalMatrix rows;
    for (std::size_t k : s.edges()) {
      const Edge& e = graph_.edge(k);
      RationalVector row;
      for (int c : t.path_coefficients(e.u, e.v)) row.emplace_back(c);
      rows.push_back(std::move(row));
    }
    auto w = RationalSubspace::from_equations(m, std::move(rows));
    require(w.dim() < m, "missing subspace is the whole character space");
    out.push_back({s, w, w.integer_equations()});
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j)
      require(i == j || !out[i].subspace.contains(out[j].subspace), "missing subspaces are nested");
  return out;
}

MembershipResult bbg_sigma_membership(const BbgCharacter& chi, const CollapseOptions& options) {
  return BnsModel(chi.graph(), options).membership(chi);
}

std::vector<MissingSubsphere> bns_complement_arrangement(const SimplicialGraph& g, const SpanningTree& t,
                                                         const CollapseOptions& options) {
  return BnsModel(g, options).arrangement(t);
}

BbgCharacter fibering_character(const SimplicialGraph& g, const SpanningTree& t, const CollapseOptions& options) {
  BnsModel model(g, options);
  if (!model.applicable()) throw HypothesisError("fibering_character: " + model.note());
  std::vector<Rational> values;
  Integer power = 1;
  for (std::size_t k = 0; k < t.size(); ++k) {
    power *= 10;
    values.emplace_back(power);
  }
  BbgCharacter chi(t, std::move(values));
  require(dead_edge_subgraph(chi).dead.empty(), "fibering character vanishes on an edge");
  return chi;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::kInSigma:
      return "IN_SIGMA";
    case Membership::kNotInSigma:
      return "NOT_IN_SIGMA";
    case Membership::kNotApplicable:
      return "NOT_APPLICABLE";
  }
  return "NOT_APPLICABLE";
}

}  // namespace bbg
