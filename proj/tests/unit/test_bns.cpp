#include <doctest.h>

#include <algorithm>
#include <map>

#include "bbgkit/bns.hpp"
#include "bbgkit/error.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit_suite/generators.hpp"

using namespace bbg;

namespace {

std::vector<Rational> values(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

RaagCharacter labels(const SimplicialGraph& g, const std::map<VertexId, int>& by_id) {
  RaagCharacter chi{g, std::vector<Rational>(g.vertex_count(), Rational(0))};
  for (const auto& [id, x] : by_id) chi.labels[static_cast<std::size_t>(g.vertex(id))] = x;
  return chi;
}

BbgCharacter trefoil_character(std::initializer_list<int> xs) {
  return BbgCharacter(*fixture("trefoil").spanning_tree(), values(xs));
}

IntegerVector row(std::initializer_list<int> xs) {
  IntegerVector out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::vector<std::string> edge_labels(const SimplicialGraph& g, const std::vector<std::size_t>& edges) {
  std::vector<std::string> out;
  for (std::size_t k : edges) out.push_back(g.edge_label(g.edge(k)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("evaluating on non-tree edges") {
  BbgCharacter chi = trefoil_character({1, 1, 0, 0, 0});
  const SimplicialGraph& g = chi.graph();
  OrientedEdge f{g.vertex("2"), g.vertex("3")};
  CHECK(evaluate(chi, f) == 0);
  CHECK(evaluate(chi, chi.tree.edge(0)) == 1);
  CHECK(evaluate(chi, chi.tree.edge(0).reversed()) == -1);
  BbgCharacter other = trefoil_character({2, 7, 0, 0, 0});
  CHECK(evaluate(other, f) == 5);
  CHECK_THROWS_AS(evaluate(chi, {g.vertex("1"), g.vertex("4")}), InputError);
  CHECK_THROWS_AS(trefoil_character({1, 2}), InputError);
}

TEST_CASE("restriction") {
  const Fixture f = fixture("fig7_cone_p5");
  SpanningTree spokes = *f.spanning_tree();
  CHECK(restrict_character(labels(f.graph, {{"apex", 3}, {"p1", 3}, {"p2", 3}, {"p3", 3}, {"p4", 3}, {"p5", 3}}), spokes)
            .is_zero());

  // Spokes run apex -> p_i, so each value is label(p_i) - label(apex).
  BbgCharacter r = restrict_character(labels(f.graph, {{"p1", 1}, {"p5", 1}}), spokes);
  CHECK(r.values == values({1, 0, 0, 0, 1}));
  CHECK(evaluate(r, {f.graph.vertex("p1"), f.graph.vertex("p2")}) == -1);
  CHECK(evaluate(r, {f.graph.vertex("p4"), f.graph.vertex("p5")}) == 1);
  CHECK(evaluate(r, {f.graph.vertex("p2"), f.graph.vertex("p3")}) == 0);

  const Fixture t = fixture("trefoil");
  SpanningTree tree = *t.spanning_tree();
  BbgCharacter one = restrict_character(labels(t.graph, {{"3", 1}}), tree);
  // 3 is the head of e2 and the tail of e5.
  CHECK(one.values == values({0, 1, 0, 0, -1}));
}

TEST_CASE("extension") {
  BbgCharacter zero = trefoil_character({0, 0, 0, 0, 0});
  CHECK(extend(zero, 0, 0).is_zero());

  BbgCharacter chi = trefoil_character({1, 1, 0, 0, 0});
  const SimplicialGraph& g = chi.graph();
  RaagCharacter hat = extend(chi, g.vertex("5"), 0);
  std::map<VertexId, Rational> got;
  for (Vertex v : g.all_vertices()) got[g.id(v)] = hat.labels[static_cast<std::size_t>(v)];
  CHECK(got == std::map<VertexId, Rational>{{"1", 1}, {"2", 1}, {"3", 1}, {"4", 0}, {"5", 0}, {"6", 0}});
}

TEST_CASE("extend then restrict is the identity") {
  suite::Rng rng(14);
  for (const char* name : {"trefoil", "fig13_3dim", "fig5_bouquet"}) {
    const SimplicialGraph g = fixture(name).graph;
    for (int trial = 0; trial < 34; ++trial) {
      BbgCharacter chi = suite::random_character(suite::random_spanning_tree(g, rng), rng);
      CHECK(restrict_character(extend(chi, 0, Rational(trial)), chi.tree).values == chi.values);
      RaagCharacter s = section(chi);
      CHECK(restrict_character(s, chi.tree).values == chi.values);
      Rational total = 0;
      for (const auto& x : s.labels) total += x;
      CHECK(total == 0);
    }
  }
}

TEST_CASE("restriction matrix has corank one") {
  for (const char* name : {"trefoil", "extended_trefoil", "k5", "path6"}) {
    const SimplicialGraph g = fixture(name).graph;
    suite::Rng rng(15);
    RationalMatrix r = restriction_matrix(suite::random_spanning_tree(g, rng));
    CHECK(r.size() == g.vertex_count() - 1);
    CHECK(rank(r, g.vertex_count()) == g.vertex_count() - 1);
    CHECK(null_space(r, g.vertex_count()) == RationalMatrix{RationalVector(g.vertex_count(), Rational(1))});
  }
}

TEST_CASE("RAAG criterion") {
  const SimplicialGraph c4 = cycle_graph(4);
  CHECK_FALSE(raag_sigma_membership(labels(c4, {{"1", 1}, {"3", 1}})));

  const SimplicialGraph bowtie = fixture("fig9_right").graph;
  CHECK_FALSE(raag_sigma_membership(labels(bowtie, {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}})));

  const SimplicialGraph t = fixture("trefoil").graph;
  CHECK(raag_sigma_membership(labels(t, {{"1", 1}, {"2", 1}, {"3", 1}, {"4", 1}, {"5", 1}, {"6", 1}})));
  // Living {1, 2}: connected but 6 has no living neighbour.
  CHECK_FALSE(raag_sigma_membership(labels(t, {{"1", 1}, {"2", 1}})));
  CHECK_THROWS_AS(raag_sigma_membership(labels(t, {})), PreconditionError);
}

TEST_CASE("dead edges") {
  const Fixture f = fixture("fig8_cross_square");
  BbgCharacter chi(*f.spanning_tree(), values({1, 1, 2, 2}));
  EdgeVanishing v = dead_edge_subgraph(chi);
  CHECK(edge_labels(f.graph, v.dead) == std::vector<std::string>{"00-40", "04-44"});
  CHECK(v.living.size() == 6);
  // Two opposite rim edges; no separator of the wheel lies inside them.
  CHECK(bbg_sigma_membership(chi).status == Membership::kInSigma);

  BbgCharacter zero(*f.spanning_tree(), values({0, 0, 0, 0}));
  CHECK(dead_edge_subgraph(zero).dead.size() == f.graph.edge_count());
  CHECK(dead_edge_subgraph(fibering_character(f.graph, *f.spanning_tree())).dead.empty());
}

TEST_CASE("trefoil membership") {
  MembershipResult equal = bbg_sigma_membership(trefoil_character({1, 1, 5, 7, 9}));
  CHECK(equal.status == Membership::kNotInSigma);
  REQUIRE(equal.dead_separator.has_value());
  const SimplicialGraph t = fixture("trefoil").graph;
  CHECK(equal.dead_separator->vertices() == make_vertex_set({t.vertex("2"), t.vertex("3")}));

  CHECK(bbg_sigma_membership(trefoil_character({1, 2, 4, 8, 16})).status == Membership::kInSigma);
  CHECK(bbg_sigma_membership(trefoil_character({0, 1, 3, 3, 3})).status == Membership::kNotInSigma);
  CHECK(bbg_sigma_membership(trefoil_character({1, 0, -1, 2, 2})).status == Membership::kNotInSigma);
  CHECK_THROWS_AS(bbg_sigma_membership(trefoil_character({0, 0, 0, 0, 0})), PreconditionError);
}

TEST_CASE("hypotheses that fail give NOT_APPLICABLE") {
  const SimplicialGraph bowtie = fixture("fig9_right").graph;
  suite::Rng rng(16);
  BbgCharacter chi = suite::random_character(suite::random_spanning_tree(bowtie, rng), rng);
  MembershipResult r = bbg_sigma_membership(chi);
  CHECK(r.status == Membership::kNotApplicable);
  CHECK_FALSE(r.note.empty());
  CHECK_THROWS_AS(fibering_character(bowtie, chi.tree), HypothesisError);
  CHECK_THROWS_AS(bns_complement_arrangement(cycle_graph(4), chi.tree), HypothesisError);
  CHECK_FALSE(BnsModel(cycle_graph(5)).applicable());
}

TEST_CASE("missing subspheres") {
  const Fixture t = fixture("trefoil");
  auto arr = bns_complement_arrangement(t.graph, *t.spanning_tree());
  REQUIRE(arr.size() == 3);
  std::vector<IntegerMatrix> rows;
  for (const auto& m : arr) rows.push_back(m.equations);
  std::sort(rows.begin(), rows.end());
  CHECK(rows == std::vector<IntegerMatrix>{{row({0, 1, 0, 0, 0})}, {row({1, -1, 0, 0, 0})}, {row({1, 0, 0, 0, 0})}});

  const Fixture x = fixture("extended_trefoil");
  auto ext = bns_complement_arrangement(x.graph, *x.spanning_tree());
  REQUIRE(ext.size() == 4);
  std::vector<IntegerVector> flat;
  for (const auto& m : ext) {
    REQUIRE(m.equations.size() == 1);
    flat.push_back(m.equations[0]);
  }
  std::sort(flat.begin(), flat.end());
  CHECK(flat == std::vector<IntegerVector>{row({0, 0, 0, 0, 1, 0}), row({0, 1, 0, 0, 0, 0}), row({1, -1, 0, 0, 0, 0}),
                                           row({1, 0, 0, 0, 0, 0})});

  const SimplicialGraph k4 = complete_graph(4);
  suite::Rng rng(17);
  CHECK(bns_complement_arrangement(k4, suite::random_spanning_tree(k4, rng)).empty());
}

TEST_CASE("hyperplanes come exactly from cut edges") {
  suite::Rng rng(18);
  for (const char* name : {"trefoil", "extended_trefoil", "fig13_3dim", "fig4_house", "fig5_bouquet", "cone:c5"}) {
    const SimplicialGraph g = fixture(name).graph;
    SpanningTree t = suite::random_spanning_tree(g, rng);
    for (const auto& m : bns_complement_arrangement(g, t)) {
      CHECK(m.separator.vertices().size() >= 2);
      CHECK(components(g, m.separator.vertices()).size() == 1);
      const bool single_edge = m.separator.edges().size() == 1;
      CHECK((m.subspace.codim() == 1) == single_edge);
      if (!single_edge) continue;
      const Edge& e = g.edge(m.separator.edges()[0]);
      if (t.contains_edge(m.separator.edges()[0])) continue;
      std::vector<int> path = t.path_coefficients(e.u, e.v);
      RationalVector rv(path.begin(), path.end());
      IntegerVector p = primitive_integer_vector(rv);
      IntegerVector neg = p;
      for (auto& z : neg) z = -z;
      CHECK((m.equations[0] == p || m.equations[0] == neg));
    }
  }
}

TEST_CASE("fibering characters") {
  const Fixture t = fixture("trefoil");
  BbgCharacter chi = fibering_character(t.graph, *t.spanning_tree());
  CHECK(chi.values == values({10, 100, 1000, 10000, 100000}));
  CHECK(dead_edge_subgraph(chi).dead.empty());
  CHECK(bbg_sigma_membership(chi).status == Membership::kInSigma);
  CHECK(bbg_sigma_membership(chi.negated()).status == Membership::kInSigma);

  for (const char* name : {"cone:trefoil", "fig7_cone_p5", "cone:c5"}) {
    const SimplicialGraph g = fixture(name).graph;
    SpanningTree spokes = *find_tree_2_spanner(g);
    CHECK(dead_edge_subgraph(fibering_character(g, spokes)).dead.empty());
  }
}

TEST_CASE("membership is antipodally symmetric and both tests agree") {
  suite::Rng rng(19);
  for (const char* name : {"trefoil", "extended_trefoil", "fig13_3dim", "fig4_diamond", "cone:c4"}) {
    BnsModel model(fixture(name).graph);
    REQUIRE(model.applicable());
    for (int trial = 0; trial < 60; ++trial) {
      BbgCharacter chi = suite::random_character(suite::random_spanning_tree(model.graph(), rng), rng);
      const bool a = !model.dead_separator(chi).has_value();
      CHECK(a == model.member_by_extensions(chi));
      CHECK(model.membership(chi).status == model.membership(chi.negated()).status);
    }
  }
}
