#include "bbgkit/graph_io.hpp"

#include <algorithm>
#include <sstream>

#include "bbgkit/error.hpp"

namespace bbg {

namespace {

std::string as_id(const nlohmann::json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  throw InputError("vertex ids must be strings or integers, got " + value.dump());
}

}  // namespace

GraphDocument graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("graph document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw InputError("graph document needs a \"vertices\" array");
  std::vector<VertexId> vertices;
  for (const auto& v : doc["vertices"]) vertices.push_back(as_id(v));

  std::vector<std::pair<VertexId, VertexId>> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw InputError("\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair, got " + e.dump());
      edges.emplace_back(as_id(e[0]), as_id(e[1]));
    }
  }
  GraphDocument out{SimplicialGraph(std::move(vertices), edges), {}};

  if (doc.contains("weights")) {
    if (!doc["weights"].is_object()) throw InputError("\"weights\" must be an object");
    std::map<std::string, std::size_t> by_label;
    for (std::size_t k = 0; k < out.graph.edge_count(); ++k) by_label.emplace(out.graph.edge_label(out.graph.edge(k)), k);
    for (const auto& [key, value] : doc["weights"].items()) {
      auto it = by_label.find(key);
      if (it == by_label.end()) throw InputError("weight key '" + key + "' does not name an edge as \"min-max\"");
      if (!value.is_number_integer() || value.get<long long>() < 2)
        throw InputError("weight of " + key + " must be an integer >= 2");
      out.weights[it->second] = value.get<std::int64_t>();
    }
  }
  return out;
}

GraphDocument parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed graph JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

nlohmann::json graph_to_json(const SimplicialGraph& g, const EdgeWeights& weights) {
  nlohmann::json doc;
  doc["vertices"] = g.ids();
  doc["edges"] = nlohmann::json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({g.id(e.u), g.id(e.v)});
  if (!weights.empty()) {
    doc["weights"] = nlohmann::json::object();
    for (const auto& [k, m] : weights) doc["weights"][g.edge_label(g.edge(k))] = m;
  }
  return doc;
}

std::string to_dot(const SimplicialGraph& g, const DotStyle& style) {
  auto quoted = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  auto has = [](const std::vector<std::size_t>& list, std::size_t k) {
    return std::find(list.begin(), list.end(), k) != list.end();
  };
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& id : g.ids()) os << "  " << quoted(id) << ";\n";
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    os << "  " << quoted(g.id(e.u)) << " -- " << quoted(g.id(e.v));
    std::vector<std::string> attrs;
    if (has(style.red_edges, k)) attrs.emplace_back("color=red");
    if (has(style.dashed_edges, k)) attrs.emplace_back("style=dashed");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bbg
