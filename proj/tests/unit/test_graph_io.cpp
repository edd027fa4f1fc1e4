#include <doctest.h>

#include "bbgkit/error.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit/graph_io.hpp"

using namespace bbg;

TEST_CASE("graph JSON round trip") {
  const SimplicialGraph t = fixture("trefoil").graph;
  GraphDocument back = graph_from_json(graph_to_json(t));
  CHECK(back.graph == t);
  CHECK(back.weights.empty());
}

TEST_CASE("weights are keyed by min-max edge labels") {
  GraphDocument d = parse_graph_json(
      R"({"vertices": ["a", "b", "c"], "edges": [["b", "a"], ["b", "c"]], "weights": {"a-b": 3, "b-c": 2}})");
  CHECK(d.graph.edge_count() == 2);
  CHECK(d.weights.at(*d.graph.edge_index(0, 1)) == 3);
  CHECK(d.weights.at(*d.graph.edge_index(1, 2)) == 2);
  CHECK(graph_from_json(graph_to_json(d.graph, d.weights)).weights == d.weights);
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(parse_graph_json("{"), InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"edges": []})"), InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["a"], "edges": [["a", "z"]]})"), InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["a", "b"], "edges": [["a", "b"]], "weights": {"a-c": 2}})"),
                  InputError);
  CHECK_THROWS_AS(parse_graph_json(R"({"vertices": ["a", "b"], "edges": [["a", "b"]], "weights": {"a-b": 1}})"),
                  InputError);
}

TEST_CASE("DOT styles tree and dead edges") {
  const SimplicialGraph g = cycle_graph(3);
  std::string dot = to_dot(g, {{0}, {1}});
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("red") != std::string::npos);
  CHECK(dot.find("dashed") != std::string::npos);
}
