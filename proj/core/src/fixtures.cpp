#include "bbgkit/fixtures.hpp"

#include <charconv>
#include <set>

#include "bbgkit/error.hpp"

namespace bbg {

namespace {

using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

SimplicialGraph from_edges(const EdgeList& edges) {
  std::set<VertexId> ids;
  for (const auto& [a, b] : edges) {
    ids.insert(a);
    ids.insert(b);
  }
  return SimplicialGraph({ids.begin(), ids.end()}, edges);
}

std::vector<VertexId> numbered(int n) {
  std::vector<VertexId> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  return ids;
}

const EdgeList kTrefoil = {{"1", "2"}, {"1", "3"}, {"2", "3"}, {"2", "4"}, {"2", "5"},
                           {"3", "5"}, {"3", "6"}, {"4", "5"}, {"5", "6"}};
const EdgeList kTrefoilTree = {{"5", "2"}, {"5", "3"}, {"5", "4"}, {"5", "6"}, {"3", "1"}};

struct Entry {
  const char* name;
  const char* description;
  EdgeList edges;
  EdgeList tree;
};

std::vector<Entry> catalog() {
  EdgeList extended = kTrefoil;
  extended.push_back({"1", "7"});
  extended.push_back({"3", "7"});
  EdgeList extended_tree = kTrefoilTree;
  extended_tree.push_back({"3", "7"});
  return {
      {"trefoil", "three triangles around a central one", kTrefoil, kTrefoilTree},
      {"extended_trefoil", "trefoil with a triangle glued on the edge 1-3", extended, extended_tree},
      {"fig4_diamond", "suspension of a path on four vertices",
       {{"n", "1"}, {"n", "2"}, {"n", "3"}, {"n", "4"}, {"s", "1"}, {"s", "2"}, {"s", "3"}, {"s", "4"},
        {"1", "2"}, {"2", "3"}, {"3", "4"}},
       {}},
      {"fig4_house", "wheel on four rim vertices with a roof triangle",
       {{"c", "a"}, {"c", "b"}, {"c", "d"}, {"c", "e"}, {"a", "b"}, {"b", "d"}, {"d", "e"}, {"e", "a"},
        {"r", "a"}, {"r", "b"}},
       {}},
      {"fig5_bouquet", "bouquet of fans and cones bonded along edges",
       {{"A", "D"}, {"A", "H"}, {"A", "I"}, {"D", "C"}, {"A", "C"}, {"C", "E"}, {"E", "A"}, {"C", "G"},
        {"G", "A"}, {"A", "F"}, {"F", "E"}, {"E", "B"}, {"B", "F"}, {"I", "C"}, {"H", "C"}},
       {{"A", "D"}, {"A", "H"}, {"A", "I"}, {"A", "C"}, {"E", "A"}, {"G", "A"}, {"F", "E"}, {"B", "F"}}},
      {"fig6a", "fan with cone vertex 20 over the path 00-02-22-42-40",
       {{"20", "00"}, {"20", "02"}, {"20", "22"}, {"20", "42"}, {"20", "40"}, {"00", "02"}, {"02", "22"},
        {"22", "42"}, {"42", "40"}},
       {{"20", "00"}, {"20", "02"}, {"20", "22"}, {"20", "42"}, {"20", "40"}}},
      {"fig6b", "three triangles in a row",
       {{"20", "00"}, {"20", "22"}, {"22", "02"}, {"00", "02"}, {"02", "20"}, {"20", "40"}, {"40", "42"},
        {"42", "22"}, {"22", "40"}},
       {{"20", "22"}, {"00", "02"}, {"02", "20"}, {"40", "42"}, {"22", "40"}}},
      {"fig7_cone_p5", "cone over a path on five vertices",
       {{"apex", "p1"}, {"apex", "p2"}, {"apex", "p3"}, {"apex", "p4"}, {"apex", "p5"}, {"p1", "p2"},
        {"p2", "p3"}, {"p3", "p4"}, {"p4", "p5"}},
       {{"apex", "p1"}, {"apex", "p2"}, {"apex", "p3"}, {"apex", "p4"}, {"apex", "p5"}}},
      {"fig8_cross_square", "wheel on four rim vertices",
       {{"c", "00"}, {"c", "40"}, {"c", "44"}, {"c", "04"}, {"00", "40"}, {"40", "44"}, {"44", "04"},
        {"04", "00"}},
       {{"c", "00"}, {"c", "40"}, {"c", "44"}, {"c", "04"}}},
      {"fig9_right", "two triangles sharing the vertex 0",
       {{"0", "1"}, {"0", "2"}, {"1", "2"}, {"0", "3"}, {"0", "4"}, {"3", "4"}},
       {}},
      {"fig13_3dim", "three-dimensional flag complex with a redundant triangle",
       {{"u", "v1"}, {"v1", "v2"}, {"v2", "u"}, {"u", "p"}, {"p", "v2"}, {"v1", "w"}, {"w", "v2"},
        {"u", "q"}, {"q", "v1"}, {"v1", "r"}, {"r", "w"}, {"r", "v2"}, {"v3", "p"}, {"v3", "u"},
        {"v3", "q"}, {"v3", "v1"}, {"v3", "v2"}, {"v3", "w"}},
       {}},
  };
}

std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int n = 0;
  const char* first = name.data() + prefix.size();
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last) return std::nullopt;
  return n;
}

void require_size(const std::string& name, int n, int lo) {
  if (n < lo || n > 200) throw InputError("fixture " + name + ": size must be between " + std::to_string(lo) + " and 200");
}

}  // namespace

std::optional<SpanningTree> Fixture::spanning_tree() const {
  if (tree.empty()) return std::nullopt;
  return SpanningTree::from_ids(graph, tree);
}

SimplicialGraph cycle_graph(int n) {
  require_size("c" + std::to_string(n), n, 3);
  EdgeList edges;
  for (int i = 1; i <= n; ++i) edges.push_back({std::to_string(i), std::to_string(i % n + 1)});
  return SimplicialGraph(numbered(n), edges);
}

SimplicialGraph complete_graph(int n) {
  require_size("k" + std::to_string(n), n, 1);
  EdgeList edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.push_back({std::to_string(i), std::to_string(j)});
  return SimplicialGraph(numbered(n), edges);
}

SimplicialGraph path_graph(int n) {
  require_size("path" + std::to_string(n), n, 1);
  EdgeList edges;
  for (int i = 1; i < n; ++i) edges.push_back({std::to_string(i), std::to_string(i + 1)});
  return SimplicialGraph(numbered(n), edges);
}

SimplicialGraph cone(const SimplicialGraph& g, const VertexId& apex) {
  if (g.find(apex)) throw InputError("cone: apex id " + apex + " already used");
  std::vector<VertexId> ids = g.ids();
  ids.push_back(apex);
  EdgeList edges;
  for (const Edge& e : g.edges()) edges.push_back({g.id(e.u), g.id(e.v)});
  for (const auto& id : g.ids()) edges.push_back({apex, id});
  return SimplicialGraph(ids, edges);
}

Fixture fixture(const std::string& name) {
  for (auto& entry : catalog())
    if (name == entry.name) return {entry.name, entry.description, from_edges(entry.edges), entry.tree};
  if (name.rfind("cone:", 0) == 0) {
    Fixture base = fixture(name.substr(5));
    return {name, "cone over " + base.name, cone(base.graph), {}};
  }
  if (name.rfind("fan", 0) == 0)
    if (auto n = suffix_number(name, "fan")) return {name, "cone over a path", cone(path_graph(*n)), {}};
  if (name.rfind("path", 0) == 0)
    if (auto n = suffix_number(name, "path")) return {name, "path", path_graph(*n), {}};
  if (auto n = suffix_number(name, "c")) return {name, "cycle", cycle_graph(*n), {}};
  if (auto n = suffix_number(name, "k")) return {name, "complete graph", complete_graph(*n), {}};
  throw InputError("unknown fixture: " + name);
}

bool is_fixture_name(const std::string& name) {
  try {
    fixture(name);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& entry : catalog()) out.emplace_back(entry.name);
  out.insert(out.begin() + 2, "c4");
  return out;
}

}  // namespace bbg
