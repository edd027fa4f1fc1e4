#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "bbgkit/graph.hpp"

namespace bbg {

// Edge weights keyed by parent edge index (Coxeter-style labels m(e) >= 2).
using EdgeWeights = std::map<std::size_t, std::int64_t>;

struct GraphDocument {
  SimplicialGraph graph;
  EdgeWeights weights;  // empty when the document has no "weights" member
};

// {"vertices": [...], "edges": [[a,b], ...], "weights": {"a-b": m, ...}}
GraphDocument graph_from_json(const nlohmann::json& doc);
GraphDocument parse_graph_json(std::string_view text);
nlohmann::json graph_to_json(const SimplicialGraph& g, const EdgeWeights& weights = {});

struct DotStyle {
  std::vector<std::size_t> red_edges;     // e.g. a tree 2-spanner
  std::vector<std::size_t> dashed_edges;  // e.g. dead edges of a character
};

std::string to_dot(const SimplicialGraph& g, const DotStyle& style = {});

}  // namespace bbg
