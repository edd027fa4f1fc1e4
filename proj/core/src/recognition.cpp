#include "bbgkit/recognition.hpp"

#include <algorithm>
#include <numeric>

#include "bbgkit/error.hpp"

namespace bbg {

namespace {

struct UnionFind {
  std::vector<std::size_t> root;
  explicit UnionFind(std::size_t n) : root(n) { std::iota(root.begin(), root.end(), 0); }
  std::size_t find(std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    root[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

std::array<Edge, 3> opposite_edges(const std::array<Vertex, 3>& v) {
  auto edge = [](Vertex a, Vertex b) { return Edge{std::min(a, b), std::max(a, b)}; };
  return {edge(v[1], v[2]), edge(v[0], v[2]), edge(v[0], v[1])};
}

// Empty string when lambda is a valid choice for v[j].
std::string check_separator(const SimplicialGraph& g, Vertex vj, const Edge& ej, const Subgraph& lambda) {
  const std::string name = "separator at " + g.id(vj);
  if (!lambda.is_full()) return name + " is not a full subgraph";
  if (!is_subset(lambda.vertices(), link(g, vj).vertices())) return name + " is not inside the link";
  if (!lambda.contains_vertex(ej.u) || !lambda.contains_vertex(ej.v)) return name + " misses the opposite edge";
  if (lambda.vertices().size() >= g.vertex_count()) return name + " contains every vertex";
  if (!is_separating(g, lambda.vertices())) return name + " does not separate";
  if (!is_minimal_separating(g, lambda.vertices())) return name + " is not minimal";
  return {};
}

std::string check_structure(const SimplicialGraph& g, const std::array<Vertex, 3>& v,
                            const std::array<Subgraph, 3>& lambda) {
  for (Vertex x : v)
    if (x < 0 || static_cast<std::size_t>(x) >= g.vertex_count()) return "triangle vertex out of range";
  if (!g.adjacent(v[0], v[1]) || !g.adjacent(v[1], v[2]) || !g.adjacent(v[0], v[2])) return "not a triangle";
  auto e = opposite_edges(v);
  for (std::size_t j = 0; j < 3; ++j)
    if (auto why = check_separator(g, v[j], e[j], lambda[j]); !why.empty()) return why;
  if (!set_intersection(set_intersection(lambda[0].vertices(), lambda[1].vertices()), lambda[2].vertices()).empty())
    return "separators share a vertex";
  return {};
}

// Characters vanishing on every edge of lambda, in the coordinates of t.
RationalSubspace missing_subspace(const SpanningTree& t, const Subgraph& lambda) {
  RationalMatrix rows;
  for (std::size_t k : lambda.edges()) {
    const Edge& e = t.parent().edge(k);
    RationalVector row;
    for (int c : t.path_coefficients(e.u, e.v)) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  return RationalSubspace::from_equations(t.size(), std::move(rows));
}

// Spanning tree built from relative spokes of v3, v2, v1 in turn, extended in
// graph edge order. Coordinates: e1, e2, then the rest in graph edge order.
SpanningTree adapted_tree(const SimplicialGraph& g, const std::array<Vertex, 3>& v,
                          const std::array<Subgraph, 3>& lambda) {
  std::vector<OrientedEdge> chosen;
  UnionFind uf(g.vertex_count());
  auto spoke = [&](Vertex centre, const VertexSet& targets) {
    for (Vertex x : targets) {
      bool fresh = uf.unite(static_cast<std::size_t>(centre), static_cast<std::size_t>(x));
      require(fresh, "relative spokes do not form a forest");
      chosen.push_back({centre, x});
    }
  };
  auto relstar = [&](std::size_t j) { return set_union(lambda[j].vertices(), VertexSet{v[j]}); };

  spoke(v[2], lambda[2].vertices());
  spoke(v[1], set_difference(lambda[1].vertices(), relstar(2)));
  spoke(v[0], set_difference(lambda[0].vertices(), set_union(relstar(1), relstar(2))));
  for (const Edge& e : g.edges())
    if (uf.unite(static_cast<std::size_t>(e.u), static_cast<std::size_t>(e.v))) chosen.push_back({e.u, e.v});

  const OrientedEdge e1{v[2], v[1]}, e2{v[2], v[0]};
  std::vector<OrientedEdge> rest;
  for (const auto& oe : chosen)
    if (oe != e1 && oe != e2) rest.push_back(oe);
  std::sort(rest.begin(), rest.end(), [](const OrientedEdge& a, const OrientedEdge& b) {
    return a.unoriented() < b.unoriented();
  });
  std::vector<OrientedEdge> ordered{e1, e2};
  ordered.insert(ordered.end(), rest.begin(), rest.end());
  return SpanningTree(g, std::move(ordered));
}

TriangleTriple adapted_triple(const SimplicialGraph& g, const std::array<Vertex, 3>& v,
                              const std::array<Subgraph, 3>& lambda) {
  TriangleTriple out;
  out.tree = adapted_tree(g, v, lambda);
  for (std::size_t j = 0; j < 3; ++j) out.w[j] = missing_subspace(out.tree, lambda[j]);
  out.report = redundant_triple_test(out.w[0], out.w[1], out.w[2], 0, 1);
  return out;
}

// Requires the separators to have empty common intersection.
RedundantTriangleWitness assemble(const SimplicialGraph& g, const std::array<Vertex, 3>& v,
                                  const std::array<Subgraph, 3>& lambda) {
  TriangleTriple triple = adapted_triple(g, v, lambda);
  for (std::size_t k = 2; k < triple.tree.size(); ++k) {
    bool engaged = std::none_of(triple.w.begin(), triple.w.end(), [&](const auto& w) { return w.contains_unit(k); });
    require(!engaged, "adapted tree has an engaged coordinate other than e1, e2");
  }
  RedundantTriangleWitness out;
  out.graph = g;
  out.v = v;
  out.e = opposite_edges(v);
  out.lambda = lambda;
  out.tree = std::move(triple.tree);
  out.w = std::move(triple.w);
  out.report = std::move(triple.report);
  return out;
}

// Candidates for v[j]: minimal full separators in the link through e[j].
std::vector<Subgraph> candidates(const SimplicialGraph& g, const std::vector<Subgraph>& separators, Vertex vj,
                                 const Edge& ej) {
  VertexSet lk = link(g, vj).vertices();
  std::vector<Subgraph> out;
  for (const auto& s : separators)
    if (is_subset(s.vertices(), lk) && s.contains_vertex(ej.u) && s.contains_vertex(ej.v)) out.push_back(s);
  return out;
}

std::optional<RedundantTriangleWitness> search_triangle(const SimplicialGraph& g,
                                                        const std::vector<Subgraph>& separators,
                                                        const std::array<Vertex, 3>& v) {
  auto c = triangle_candidates(g, separators, v);
  for (const auto& a : c[0])
    for (const auto& b : c[1]) {
      VertexSet ab = set_intersection(a.vertices(), b.vertices());
      for (const auto& d : c[2]) {
        if (!set_intersection(ab, d.vertices()).empty()) continue;
        RedundantTriangleWitness w = assemble(g, v, {a, b, d});
        require(w.report.is_redundant, "redundant triangle produced a non-redundant triple");
        return w;
      }
    }
  return std::nullopt;
}

std::optional<RedundantTriangleWitness> search(const SimplicialGraph& g, const std::vector<Subgraph>& separators) {
  FlagComplex fc = build_flag_complex(g, 2);
  for (const Simplex& t : fc.triangles())
    if (auto w = search_triangle(g, separators, {t[0], t[1], t[2]})) return w;
  return std::nullopt;
}

}  // namespace

TriangleTriple triangle_triple(const SimplicialGraph& g, const std::array<Vertex, 3>& v,
                               const std::array<Subgraph, 3>& lambda) {
  auto e = opposite_edges(v);
  if (!g.adjacent(v[0], v[1]) || !g.adjacent(v[1], v[2]) || !g.adjacent(v[0], v[2]))
    throw InputError("triangle_triple: not a triangle");
  for (std::size_t j = 0; j < 3; ++j) {
    if (!is_subset(lambda[j].vertices(), link(g, v[j]).vertices()) || !lambda[j].contains_vertex(e[j].u) ||
        !lambda[j].contains_vertex(e[j].v))
      throw InputError("triangle_triple: separator " + std::to_string(j + 1) + " is not in the link through the opposite edge");
  }
  return adapted_triple(g, v, lambda);
}

std::array<std::vector<Subgraph>, 3> triangle_candidates(const SimplicialGraph& g,
                                                         const std::vector<Subgraph>& separators,
                                                         const std::array<Vertex, 3>& v) {
  auto e = opposite_edges(v);
  std::array<std::vector<Subgraph>, 3> out;
  for (std::size_t j = 0; j < 3; ++j) out[j] = candidates(g, separators, v[j], e[j]);
  return out;
}

RedundantTriangleWitness build_redundant_triangle_witness(const SimplicialGraph& g, std::array<Vertex, 3> v,
                                                          const std::array<VertexSet, 3>& lambda) {
  std::array<Subgraph, 3> subs;
  for (std::size_t j = 0; j < 3; ++j) {
    for (Vertex x : lambda[j])
      if (x < 0 || static_cast<std::size_t>(x) >= g.vertex_count()) throw InputError("separator vertex out of range");
    subs[j] = Subgraph::full(g, make_vertex_set(lambda[j]));
  }
  if (auto why = check_structure(g, v, subs); !why.empty()) throw InputError("redundant triangle: " + why);
  RedundantTriangleWitness w = assemble(g, v, subs);
  require(w.report.is_redundant, "redundant triangle produced a non-redundant triple");
  return w;
}

WitnessCheck verify_redundant_triangle_witness(const RedundantTriangleWitness& w) {
  const SimplicialGraph& g = w.graph;
  if (auto why = check_structure(g, w.v, w.lambda); !why.empty()) return {false, why};
  if (w.e != opposite_edges(w.v)) return {false, "opposite edges do not match the triangle"};
  if (!(w.tree.parent() == g) || w.tree.size() < 2) return {false, "tree does not belong to the graph"};
  if (w.tree.edge(0).unoriented() != w.e[0] || w.tree.edge(1).unoriented() != w.e[1])
    return {false, "tree coordinates 1 and 2 are not e1 and e2"};
  std::array<RationalSubspace, 3> fresh;
  for (std::size_t j = 0; j < 3; ++j) {
    fresh[j] = missing_subspace(w.tree, w.lambda[j]);
    if (!(fresh[j] == w.w[j])) return {false, "stored subspace differs from the recomputed one"};
  }
  try {
    RedundantTripleReport r = redundant_triple_test(fresh[0], fresh[1], fresh[2], 0, 1);
    if (!r.is_redundant) return {false, "triple is not redundant"};
    if (!r.inequality_holds) return {false, "inclusion-exclusion inequality fails"};
    if (w.report.is_redundant != r.is_redundant || w.report.iep3_value != r.iep3_value ||
        w.report.sum_dim != r.sum_dim || !(w.report.xi == r.xi))
      return {false, "stored report differs from the recomputed one"};
  } catch (const InputError& err) {
    return {false, err.what()};
  }
  return {true, {}};
}

std::optional<RedundantTriangleWitness> find_redundant_triangle(const SimplicialGraph& g,
                                                               const CollapseOptions& options) {
  BnsModel model(g, options);
  if (!model.applicable()) throw HypothesisError("find_redundant_triangle: " + model.note());
  return search(g, model.separators());
}

std::vector<CrownedRedundancy> crowned_implies_redundant_dim2(const FlagComplex& fc,
                                                              const CollapseOptions& options) {
  if (fc.dimension() != 2) throw PreconditionError("crowned_implies_redundant_dim2 requires dimension 2");
  const SimplicialGraph& g = fc.base();
  BnsModel model(g, options);
  if (!model.applicable()) throw HypothesisError("crowned_implies_redundant_dim2: " + model.note());
  std::vector<CrownedRedundancy> out;
  for (const Simplex& t : crowned_triangles(fc)) {
    auto w = search_triangle(g, model.separators(), {t[0], t[1], t[2]});
    if (!w) throw InvariantViolation("crowned triangle without redundancy witness");
    out.push_back({t, std::move(*w)});
  }
  return out;
}

namespace {

RecognitionVerdict recognize_block(const SimplicialGraph& g, bool parent_certified, const CollapseOptions& options) {
  RecognitionVerdict out;
  out.graph = g;
  if (auto t = find_tree_2_spanner(g)) {
    out.status = Verdict::kRaag;
    out.raag = RaagCertificate{*t, dual_graph(g, *t)};
    return out;
  }
  // A block of a simply connected flag complex is simply connected: the
  // complex is the wedge of its blocks at the cut vertices.
  BnsModel model(g, options);
  if (!model.applicable() && !parent_certified) {
    out.status = Verdict::kUnknown;
    out.note = model.note();
    return out;
  }
  std::vector<Subgraph> separators =
      model.applicable() ? model.separators() : minimal_full_separating_subgraphs(g);
  if (auto w = search(g, separators)) {
    out.status = Verdict::kNotRaagNotArtin;
    out.witness = std::move(w);
    return out;
  }
  FlagComplex fc = build_flag_complex(g, 3);
  if (fc.dimension() == 2) throw InvariantViolation("two-dimensional block with neither spanner nor redundant triangle");
  out.status = Verdict::kUnknown;
  out.note = "no tree 2-spanner and no redundant triangle in dimension above two";
  return out;
}

}  // namespace

RecognitionVerdict recognize(const SimplicialGraph& g, const CollapseOptions& options) {
  RecognitionVerdict out;
  out.graph = g;
  if (g.vertex_count() == 0) throw InputError("recognize: empty graph");

  auto comps = components(g);
  if (comps.size() > 1) {
    out.status = Verdict::kNotApplicable;
    out.note = "disconnected graph: the group is a free product of the component groups";
    for (const auto& c : comps) out.parts.push_back(recognize(Subgraph::full(g, c).as_graph(), options));
    return out;
  }

  out.connectivity = simple_connectivity(build_flag_complex(g), options);
  if (out.connectivity->verdict == Connectivity::kNotSimplyConnected) {
    out.status = Verdict::kNotFinitelyPresented;
    out.note = "flag complex is not simply connected";
    return out;
  }
  if (out.connectivity->verdict == Connectivity::kUnknown) {
    out.status = Verdict::kUnknown;
    out.note = "simple connectivity could not be decided";
    return out;
  }

  if (g.vertex_count() <= 2 || is_biconnected(g).biconnected) {
    RecognitionVerdict block = recognize_block(g, true, options);
    block.connectivity = out.connectivity;
    return block;
  }

  bool any_not = false, any_unknown = false;
  for (const Subgraph& b : biconnected_components(g)) {
    out.parts.push_back(recognize_block(b.as_graph(), true, options));
    any_not |= out.parts.back().status == Verdict::kNotRaagNotArtin;
    any_unknown |= out.parts.back().status == Verdict::kUnknown;
  }
  if (any_not) {
    out.status = Verdict::kNotRaagNotArtin;
    for (const auto& p : out.parts)
      if (p.witness) {
        out.witness = p.witness;
        std::string ids;
        for (const auto& id : p.graph.ids()) ids += (ids.empty() ? "" : ",") + id;
        out.note = "block {" + ids + "} is not a RAAG; the group is the free product over blocks";
        break;
      }
    return out;
  }
  if (any_unknown) {
    out.status = Verdict::kUnknown;
    out.note = "a block is undecided";
    return out;
  }
  // Every edge lies in one block, so the block trees glue to a tree 2-spanner.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& p : out.parts)
    for (const auto& e : p.raag->tree.oriented_ids()) edges.push_back(e);
  SpanningTree t = SpanningTree::from_ids(g, edges);
  require(verify_tree_2_spanner(g, t).ok, "glued block trees are not a tree 2-spanner");
  out.status = Verdict::kRaag;
  out.raag = RaagCertificate{t, dual_graph(g, t)};
  return out;
}

std::vector<RationalSubspace> resonance_arrangement(const SimplicialGraph& g, const SpanningTree& t,
                                                    const CollapseOptions& options) {
  std::vector<RationalSubspace> out;
  for (auto& m : bns_complement_arrangement(g, t, options)) out.push_back(std::move(m.subspace));
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kRaag:
      return "RAAG";
    case Verdict::kNotRaagNotArtin:
      return "NOT_RAAG_NOT_ARTIN";
    case Verdict::kNotFinitelyPresented:
      return "NOT_FINITELY_PRESENTED";
    case Verdict::kUnknown:
      return "UNKNOWN";
    case Verdict::kNotApplicable:
      return "NOT_APPLICABLE";
  }
  return "UNKNOWN";
}

}  // namespace bbg
