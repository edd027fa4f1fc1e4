#include "bbgkit/json_report.hpp"

#include "bbgkit/error.hpp"

namespace bbg {

using nlohmann::json;

namespace {

json ids(const SimplicialGraph& g, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(g.id(v));
  return out;
}

json integer_rows(const IntegerMatrix& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json r = json::array();
    for (const auto& x : row) r.push_back(to_string(x));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

json tree_to_json(const SpanningTree& t) {
  json out = json::array();
  for (const auto& [a, b] : t.oriented_ids()) out.push_back({a, b});
  return out;
}

json character_to_json(const BbgCharacter& chi) {
  json values = json::array();
  for (const auto& x : chi.values) values.push_back(to_string(x));
  return {{"tree", tree_to_json(chi.tree)}, {"values", values}};
}

BbgCharacter character_from_json(const SimplicialGraph& g, const json& doc) {
  if (!doc.is_object() || !doc.contains("tree") || !doc.contains("values"))
    throw InputError("character JSON needs \"tree\" and \"values\"");
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : doc.at("tree")) {
    if (!e.is_array() || e.size() != 2) throw InputError("tree edges must be pairs of vertex ids");
    auto id = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    edges.emplace_back(id(e[0]), id(e[1]));
  }
  std::vector<Rational> values;
  for (const auto& x : doc.at("values")) values.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
  return BbgCharacter(SpanningTree::from_ids(g, edges), std::move(values));
}

json arrangement_to_json(const SpanningTree& t, const std::vector<MissingSubsphere>& arrangement) {
  json subspheres = json::array();
  for (const auto& m : arrangement)
    subspheres.push_back({{"separator_vertices", m.separator.vertex_ids()},
                          {"dimension", m.subspace.dim()},
                          {"equations", integer_rows(m.equations)}});
  return {{"coordinates", tree_to_json(t)}, {"subspheres", subspheres}};
}

json connectivity_to_json(const SimplicialGraph& g, const SimpleConnectivityStatus& s) {
  json torsion = json::array();
  for (const auto& d : s.h1.torsion) torsion.push_back(to_string(d));
  json out = {{"verdict", to_string(s.verdict)},
              {"h1", {{"rank", s.h1.rank}, {"torsion", torsion}}},
              {"seed", s.seed},
              {"attempts", s.attempts}};
  if (s.verdict == Connectivity::kSimplyConnected) {
    out["collapse_steps"] = s.collapse.size();
    if (s.survivor) out["survivor"] = g.id(*s.survivor);
  }
  if (!s.cycle.empty()) out["cycle"] = ids(g, s.cycle);
  return out;
}

json dual_to_json(const DualGraph& d) { return graph_to_json(d.graph); }

json witness_to_json(const RedundantTriangleWitness& w) {
  const SimplicialGraph& g = w.graph;
  json lambdas = json::array();
  for (const auto& l : w.lambda) lambdas.push_back(l.vertex_ids());
  json subspaces = json::array();
  for (const auto& s : w.w) subspaces.push_back({{"dimension", s.dim()}, {"equations", integer_rows(s.integer_equations())}});
  const auto& r = w.report;
  return {{"triangle", ids(g, {w.v[0], w.v[1], w.v[2]})},
          {"separators", lambdas},
          {"tree", tree_to_json(w.tree)},
          {"subspaces", subspaces},
          {"redundant", r.is_redundant},
          {"iep3", r.iep3_value},
          {"sum_dimension", r.sum_dim}};
}

json verdict_to_json(const RecognitionVerdict& v) {
  json out = {{"status", to_string(v.status)}, {"vertices", v.graph.ids()}};
  if (!v.note.empty()) out["note"] = v.note;
  if (v.connectivity) out["simple_connectivity"] = connectivity_to_json(v.graph, *v.connectivity);
  if (v.raag) out["certificate"] = {{"tree", tree_to_json(v.raag->tree)}, {"dual_graph", dual_to_json(v.raag->dual)}};
  if (v.witness) out["certificate"] = {{"redundant_triangle", witness_to_json(*v.witness)}};
  if (!v.parts.empty()) {
    json parts = json::array();
    for (const auto& p : v.parts) parts.push_back(verdict_to_json(p));
    out["parts"] = parts;
  }
  return out;
}

json presentation_to_json(const GroupPresentation& p, const SimplicialGraph& g) {
  json gens = json::array();
  for (const auto& gen : p.generators) {
    json item = {{"name", gen.name}};
    if (gen.edge) item["edge"] = {g.id(gen.edge->tail), g.id(gen.edge->head)};
    gens.push_back(std::move(item));
  }
  json rels = json::array();
  for (const auto& r : p.relators) rels.push_back(word_to_string(p, r));
  Abelianization ab = abelianization(p);
  json torsion = json::array();
  for (const auto& d : ab.torsion) torsion.push_back(to_string(d));
  return {{"kind", to_string(p.kind)},
          {"generators", gens},
          {"relators", rels},
          {"abelianization", {{"rank", ab.rank}, {"torsion", torsion}}}};
}

}  // namespace bbg
