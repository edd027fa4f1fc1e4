#include <doctest.h>

#include <algorithm>
#include <set>

#include "bbgkit/error.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit/presentation.hpp"
#include "bbgkit/spanner.hpp"
#include "bbgkit_suite/generators.hpp"

using namespace bbg;

namespace {

struct Built {
  FlagComplex fc;
  SimpleConnectivityStatus sc;
};

Built build(const SimplicialGraph& g) {
  FlagComplex fc = build_flag_complex(g);
  return {fc, simple_connectivity(fc)};
}

std::vector<std::pair<int, int>> commutator_pairs(const GroupPresentation& p) {
  std::vector<std::pair<int, int>> out;
  for (const Word& r : p.relators) {
    REQUIRE(r.size() == 4);
    out.emplace_back(r[0], r[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("word reduction") {
  CHECK(free_reduce({1, 2, -2, -1, 3}) == Word{3});
  CHECK(cyclic_reduce({-1, 2, 3, 1}) == Word{2, 3});
  CHECK(inverse({1, -2, 3}) == Word{-3, 2, -1});
  CHECK(commutator({1}, {2}) == Word{1, 2, -1, -2});
  CHECK(commutator({1}, {1}).empty());
}

TEST_CASE("commutator recognition up to rotation and inversion") {
  auto c = as_commutator({2, -1, -2, 1});
  REQUIRE(c.has_value());
  CHECK(free_reduce(commutator(c->first, c->second)).size() == 4);
  CHECK(as_commutator({1, 2, -1, -2}).has_value());
  CHECK(as_commutator(commutator({1, -2}, {3})).has_value());
  CHECK_FALSE(as_commutator({1, 2, 3}).has_value());
  CHECK_FALSE(as_commutator({1, 1, -2, -2}).has_value());
}

TEST_CASE("Dicks-Leary presentations") {
  Built k3 = build(complete_graph(3));
  GroupPresentation p = dicks_leary(k3.fc, k3.sc);
  CHECK(p.generators.size() == 3);
  CHECK(p.relators.size() == 2);
  CHECK(abelianization(p).rank == 2);
  CHECK(abelianization(p).torsion.empty());

  Built tree = build(path_graph(5));
  GroupPresentation free = dicks_leary(tree.fc, tree.sc);
  CHECK(free.generators.size() == 4);
  CHECK(free.relators.empty());
  CHECK(to_text(free) == "< x1, x2, x3, x4 | >");

  Built t = build(fixture("trefoil").graph);
  GroupPresentation dl = dicks_leary(t.fc, t.sc);
  CHECK(dl.generators.size() == 9);
  CHECK(dl.relators.size() == 8);  // both orientations of each of the four triangles
  CHECK(abelianization(dl).rank == 5);
  CHECK(word_to_string(dl, dl.relators[0]) == "x1 x3 x2^-1");
}

TEST_CASE("tree-simplified relators have zero exponent sums") {
  // Triangle relators x y z^-1 do not; eliminating the non-tree edges
  // leaves commutators, which do.
  suite::Rng rng(6);
  for (const char* name : {"trefoil", "extended_trefoil", "fig5_bouquet", "fig13_3dim", "k5"}) {
    const SimplicialGraph g = fixture(name).graph;
    Built b = build(g);
    for (int trial = 0; trial < 5; ++trial) {
      GroupPresentation p = tree_simplified(b.fc, b.sc, suite::random_spanning_tree(g, rng));
      for (const Word& r : p.relators) {
        std::vector<int> sums(p.generators.size(), 0);
        for (int letter : r) sums[static_cast<std::size_t>(std::abs(letter) - 1)] += letter > 0 ? 1 : -1;
        CHECK(std::all_of(sums.begin(), sums.end(), [](int s) { return s == 0; }));
      }
    }
  }
}

TEST_CASE("uncertified complexes are refused") {
  Built c4 = build(cycle_graph(4));
  CHECK_THROWS_AS(dicks_leary(c4.fc, c4.sc), HypothesisError);
}

TEST_CASE("tree-simplified trefoil") {
  const Fixture f = fixture("trefoil");
  Built t = build(f.graph);
  GroupPresentation p = tree_simplified(t.fc, t.sc, *f.spanning_tree());
  CHECK(p.generators.size() == 5);
  CHECK(to_text(p) == "< e1, e2, e3, e4, e5 | [e1 e2^-1, e5^-1], [e1, e2], [e1, e3], [e2, e4] >");
  CHECK(abelianization(p).rank == abelianization(dicks_leary(t.fc, t.sc)).rank);
  for (const Word& r : p.relators) CHECK(as_commutator(r).has_value());
}

TEST_CASE("tree-simplified small cases") {
  Built k3 = build(complete_graph(3));
  GroupPresentation p = tree_simplified(k3.fc, k3.sc, *find_tree_2_spanner(complete_graph(3)));
  CHECK(to_text(p) == "< e1, e2 | [e1, e2] >");

  const SimplicialGraph path = path_graph(4);
  Built b = build(path);
  GroupPresentation free = tree_simplified(b.fc, b.sc, SpanningTree::canonical(path, {0, 1, 2}));
  CHECK(free.relators.empty());
}

TEST_CASE("RAAG presentations follow the dual graph") {
  const Fixture a = fixture("fig6a");
  FlagComplex fc = build_flag_complex(a.graph);
  GroupPresentation p = raag_presentation(fc, *a.spanning_tree());
  DualGraph d = dual_graph(a.graph, *a.spanning_tree());
  std::vector<std::pair<int, int>> expected;
  for (auto [i, j] : d.coordinate_edges) expected.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  CHECK(commutator_pairs(p) == expected);
  CHECK(p.relators.size() == 4);
  CHECK(abelianization(p).rank == 5);

  const Fixture cone_p3 = fixture("fan3");
  SpanningTree spokes = SpanningTree::from_ids(cone_p3.graph, {{"apex", "1"}, {"apex", "2"}, {"apex", "3"}});
  GroupPresentation ap3 = raag_presentation(build_flag_complex(cone_p3.graph), spokes);
  CHECK(to_text(ap3) == "< e1, e2, e3 | [e1, e2], [e2, e3] >");
  CHECK(to_text(raag_of_graph(path_graph(3))) == "< 1, 2, 3 | [1, 2], [2, 3] >");

  const Fixture t = fixture("trefoil");
  CHECK_THROWS_AS(raag_presentation(build_flag_complex(t.graph), *t.spanning_tree()), PreconditionError);
}

TEST_CASE("odd contraction") {
  const SimplicialGraph p = path_graph(3);
  auto weights = [&](std::int64_t ab, std::int64_t bc) {
    return EdgeWeights{{*p.edge_index(0, 1), ab}, {*p.edge_index(1, 2), bc}};
  };
  CHECK(are_isomorphic(odd_contraction(p, weights(2, 2)), p));

  SimplicialGraph one = odd_contraction(p, weights(3, 3));
  CHECK(one.vertex_count() == 1);
  CHECK(one.edge_count() == 0);

  SimplicialGraph two = odd_contraction(p, weights(3, 2));
  CHECK(two.ids() == std::vector<VertexId>{"{1,2}", "{3}"});
  CHECK(two.edge_count() == 1);

  CHECK_THROWS_AS(odd_contraction(p, {{0, 3}}), InputError);
  CHECK_THROWS_AS(odd_contraction(p, weights(0, 2)), InputError);
}
