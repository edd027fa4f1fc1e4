#include <doctest.h>

#include "bbgkit/error.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit/flag_complex.hpp"

using namespace bbg;

TEST_CASE("catalog sizes") {
  struct Expect {
    const char* name;
    std::size_t vertices, edges, triangles;
  };
  for (const Expect& e : {Expect{"trefoil", 6, 9, 4}, Expect{"extended_trefoil", 7, 11, 5}, Expect{"c4", 4, 4, 0},
                          Expect{"fig6a", 6, 9, 4}, Expect{"fig6b", 6, 9, 4}, Expect{"fig7_cone_p5", 6, 9, 4},
                          Expect{"fig8_cross_square", 5, 8, 4}, Expect{"fig9_right", 5, 6, 2},
                          Expect{"fig4_diamond", 6, 11, 6}}) {
    CAPTURE(e.name);
    Fixture f = fixture(e.name);
    CHECK(f.graph.vertex_count() == e.vertices);
    CHECK(f.graph.edge_count() == e.edges);
    CHECK(build_flag_complex(f.graph).count(2) == e.triangles);
  }
}

TEST_CASE("every catalog entry builds and its tree spans") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    CHECK(is_fixture_name(name));
    Fixture f = fixture(name);
    CHECK(f.name == name);
    CHECK_FALSE(f.description.empty());
    CHECK(is_connected(f.graph));
    if (!f.tree.empty()) CHECK(f.spanning_tree()->size() == f.graph.vertex_count() - 1);
  }
  CHECK_FALSE(fixture("c5").spanning_tree().has_value());
}

TEST_CASE("generated families") {
  CHECK(fixture("k6").graph.edge_count() == 15);
  CHECK(fixture("c7").graph.edge_count() == 7);
  CHECK(fixture("path4").graph.edge_count() == 3);
  CHECK(fixture("fan4").graph.vertex_count() == 5);
  CHECK(fixture("fan4").graph.edge_count() == 7);
  Fixture c = fixture("cone:trefoil");
  CHECK(c.graph.vertex_count() == 7);
  CHECK(c.graph.degree(c.graph.vertex("apex")) == 6);
  CHECK_THROWS_AS(fixture("cone:cone:c4"), InputError);  // apex id already taken
}

TEST_CASE("bad names") {
  for (const char* bad : {"nope", "c2", "k0", "c", "fan", "cone:", "cone:nope", "c4x"}) {
    CAPTURE(bad);
    CHECK_FALSE(is_fixture_name(bad));
    CHECK_THROWS_AS(fixture(bad), InputError);
  }
}
