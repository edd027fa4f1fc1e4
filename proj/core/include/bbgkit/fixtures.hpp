#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbgkit/graph.hpp"
#include "bbgkit/spanner.hpp"

namespace bbg {

struct Fixture {
  std::string name;
  std::string description;
  SimplicialGraph graph;
  // A distinguished oriented tree, listed in coordinate order, if any.
  std::vector<std::pair<VertexId, VertexId>> tree;

  std::optional<SpanningTree> spanning_tree() const;
};

// Named graphs: the static catalog plus c<n>, k<n>, path<n>, fan<n> and
// cone:<name> (apex id "apex"). Throws InputError for unknown names.
Fixture fixture(const std::string& name);
bool is_fixture_name(const std::string& name);

// Every static catalog entry, in a fixed order.
std::vector<std::string> fixture_names();

SimplicialGraph cycle_graph(int n);
SimplicialGraph complete_graph(int n);
SimplicialGraph path_graph(int n);
SimplicialGraph cone(const SimplicialGraph& g, const VertexId& apex = "apex");

}  // namespace bbg
