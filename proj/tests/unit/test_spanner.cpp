#include <doctest.h>

#include <algorithm>

#include "bbgkit/error.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit/spanner.hpp"
#include "bbgkit_suite/generators.hpp"
#include "bbgkit_suite/oracles.hpp"

using namespace bbg;

namespace {

// Every spanning tree by enumerating (|V|-1)-edge subsets.
std::vector<SpanningTree> all_spanning_trees(const SimplicialGraph& g) {
  const std::size_t m = g.edge_count(), n = g.vertex_count();
  std::vector<SpanningTree> out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
  do {
    std::vector<std::size_t> chosen;
    for (std::size_t k = 0; k < m; ++k)
      if (pick[k]) chosen.push_back(k);
    try {
      out.push_back(SpanningTree::canonical(g, chosen));
    } catch (const InputError&) {
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace

TEST_CASE("spanning tree validation and coordinates") {
  const Fixture t = fixture("trefoil");
  SpanningTree tree = *t.spanning_tree();
  CHECK(tree.size() == 5);
  CHECK(tree.edge(0) == OrientedEdge{t.graph.vertex("5"), t.graph.vertex("2")});
  CHECK(tree.path(t.graph.vertex("2"), t.graph.vertex("1")).size() == 4);
  // 2 -> 5 -> 3 -> 1 runs against e1, then along e2 and e5.
  CHECK(tree.path_coefficients(t.graph.vertex("2"), t.graph.vertex("1")) == std::vector<int>{-1, 1, 0, 0, 1});

  CHECK_THROWS_AS(SpanningTree::from_ids(t.graph, {{"5", "2"}, {"5", "3"}}), InputError);
  CHECK_THROWS_AS(SpanningTree::from_ids(t.graph, {{"5", "2"}, {"5", "3"}, {"2", "3"}, {"5", "4"}, {"5", "6"}}),
                  InputError);
  CHECK_THROWS_AS(SpanningTree::from_ids(t.graph, {{"1", "4"}, {"5", "3"}, {"5", "2"}, {"5", "4"}, {"5", "6"}}),
                  InputError);
}

TEST_CASE("the trefoil has no tree 2-spanner") {
  const SimplicialGraph g = fixture("trefoil").graph;
  auto trees = all_spanning_trees(g);
  CHECK(trees.size() == 54);  // Kirchhoff: any cofactor of the Laplacian is 54
  for (const auto& t : trees) {
    SpannerCheck c = verify_tree_2_spanner(g, t);
    CHECK_FALSE(c.ok);
    CHECK(c.violation.has_value());
  }
  CHECK_FALSE(find_tree_2_spanner(g).has_value());
  CHECK(enumerate_tree_2_spanners(g).empty());
}

TEST_CASE("spoke trees of cones and trees themselves are 2-spanners") {
  const Fixture f = fixture("fig7_cone_p5");
  CHECK(verify_tree_2_spanner(f.graph, *f.spanning_tree()).ok);

  const SimplicialGraph p = path_graph(5);
  std::vector<std::size_t> all(p.edge_count());
  for (std::size_t k = 0; k < all.size(); ++k) all[k] = k;
  CHECK(verify_tree_2_spanner(p, SpanningTree::canonical(p, all)).ok);
}

TEST_CASE("edge check agrees with the all-pairs check") {
  suite::Rng rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    SimplicialGraph g = suite::random_connected_graph(6 + trial % 4, 0.5, rng);
    SpanningTree t = suite::random_spanning_tree(g, rng);
    CHECK(verify_tree_2_spanner(g, t).ok == suite::all_pairs_spanner_check(g, t));
  }
}

TEST_CASE("search agrees with the brute-force count") {
  suite::Rng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    SimplicialGraph g = suite::random_connected_graph(6, 0.55, rng);
    std::size_t count = suite::brute_force_spanner_count(g);
    CHECK(find_tree_2_spanner(g).has_value() == (count > 0));
    CHECK(enumerate_tree_2_spanners(g).size() == count);
  }
}

TEST_CASE("dual graphs") {
  const Fixture a = fixture("fig6a"), b = fixture("fig6b");
  const SimplicialGraph p5 = path_graph(5);
  DualGraph da = dual_graph(a.graph, *a.spanning_tree());
  DualGraph db = dual_graph(b.graph, *b.spanning_tree());
  CHECK(are_isomorphic(da.graph, p5));
  CHECK(are_isomorphic(db.graph, p5));
  CHECK(graphs_define_isomorphic_bbgs(a.graph, *a.spanning_tree(), b.graph, *b.spanning_tree()));
  CHECK(graphs_define_isomorphic_bbgs(a.graph, *a.spanning_tree(), a.graph, *a.spanning_tree()));

  const SimplicialGraph k3 = complete_graph(3);
  DualGraph d3 = dual_graph(k3, *find_tree_2_spanner(k3));
  CHECK(d3.graph.vertex_count() == 2);
  CHECK(d3.graph.edge_count() == 1);

  // Coning with the spoke tree gives back the base graph.
  const SimplicialGraph tref = fixture("trefoil").graph;
  const SimplicialGraph c = cone(tref);
  SpanningTree spokes = *find_tree_2_spanner(c);
  CHECK(are_isomorphic(dual_graph(c, spokes).graph, tref));

  const SimplicialGraph cp3 = fixture("fan3").graph, cc4 = fixture("cone:c4").graph;
  CHECK_FALSE(graphs_define_isomorphic_bbgs(cp3, *find_tree_2_spanner(cp3), cc4, *find_tree_2_spanner(cc4)));

  SpanningTree bad = SpanningTree::from_ids(tref, fixture("trefoil").tree);
  CHECK_THROWS_AS(dual_graph(tref, bad), PreconditionError);
}

TEST_CASE("all 2-spanners of a graph have isomorphic duals") {
  for (const char* name : {"fig6a", "fig6b", "fig5_bouquet", "fan5", "k4", "cone:c5"}) {
    const SimplicialGraph g = fixture(name).graph;
    auto spanners = enumerate_tree_2_spanners(g, 200);
    REQUIRE(!spanners.empty());
    const SimplicialGraph first = dual_graph(g, spanners.front()).graph;
    for (const auto& t : spanners) CHECK(are_isomorphic(dual_graph(g, t).graph, first));
  }
}

TEST_CASE("isomorphism search") {
  CHECK(are_isomorphic(cycle_graph(5), SimplicialGraph({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"c", "e"}, {"e", "b"},
                                                                                    {"b", "d"}, {"d", "a"}})));
  CHECK_FALSE(are_isomorphic(cycle_graph(4), path_graph(4)));
  CHECK_FALSE(are_isomorphic(path_graph(3), path_graph(4)));
}

TEST_CASE("fan and cone decomposition") {
  const SimplicialGraph bouquet = fixture("fig5_bouquet").graph;
  auto d = decompose_fans_cones(build_flag_complex(bouquet));
  REQUIRE(d.has_value());
  CHECK(d->pieces.size() > 1);
  CHECK_FALSE(d->bonding_edges.empty());
  SpanningTree glued = spanner_from_decomposition(bouquet, *d);
  CHECK(verify_tree_2_spanner(bouquet, glued).ok);

  auto wheel = decompose_fans_cones(build_flag_complex(fixture("cone:c5").graph));
  REQUIRE(wheel.has_value());
  REQUIRE(wheel->pieces.size() == 1);
  CHECK(wheel->pieces[0].kind == PieceKind::kSimpleCone);
  CHECK(wheel->bonding_edges.empty());

  CHECK_THROWS_AS(decompose_fans_cones(build_flag_complex(fixture("trefoil").graph)), PreconditionError);
  try {
    decompose_fans_cones(build_flag_complex(fixture("trefoil").graph));
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
}

TEST_CASE("no interior triangles or edges and at most one interior vertex without crowns") {
  suite::Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    SimplicialGraph g = suite::random_2tree(9, suite::CrownPolicy::kAvoid, rng);
    FlagComplex fc = build_flag_complex(g);
    if (!decompose_fans_cones(fc)) continue;
    BoundaryClassification b = classify_boundary(fc);
    CHECK(b.interior_edges.empty());
    CHECK(b.interior_vertices.size() <= 1);
    for (const Simplex& t : fc.triangles()) {
      bool touches = false;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          touches = touches || fc.triangles_on_edge(*g.edge_index(t[i], t[j])).size() == 1;
      CHECK(touches);
    }
  }
}

TEST_CASE("spanner exists iff no crowned triangle on random 2-trees") {
  suite::Rng rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    auto policy = trial % 2 ? suite::CrownPolicy::kForce : suite::CrownPolicy::kAvoid;
    SimplicialGraph g = suite::random_2tree(7 + trial % 5, policy, rng);
    bool crowned = !crowned_triangles(build_flag_complex(g)).empty();
    CHECK(crowned == (policy == suite::CrownPolicy::kForce));
    CHECK(find_tree_2_spanner(g).has_value() == !crowned);
  }
}
