// bbgkit command-line front end.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bbgkit/bns.hpp"
#include "bbgkit/error.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit/flag_complex.hpp"
#include "bbgkit/graph_io.hpp"
#include "bbgkit/json_report.hpp"
#include "bbgkit/presentation.hpp"
#include "bbgkit/recognition.hpp"
#include "bbgkit/spanner.hpp"
#include "bbgkit_suite/acceptance.hpp"

namespace {

using namespace bbg;

enum Exit { kOk = 0, kSuiteFailure = 1, kInputError = 2, kHypothesis = 3, kInternal = 4 };

struct Loaded {
  SimplicialGraph graph;
  EdgeWeights weights;
  std::optional<SpanningTree> tree;  // a fixture's distinguished tree
};

Loaded load(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buffer;
    buffer << in.rdbuf();
    GraphDocument doc = parse_graph_json(buffer.str());
    return {doc.graph, doc.weights, std::nullopt};
  }
  Fixture f = fixture(arg);
  return {f.graph, {}, f.spanning_tree()};
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

// "5>2,5>3": oriented tree edges in coordinate order.
SpanningTree parse_tree(const SimplicialGraph& g, const std::string& text) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& item : split(text, ',')) {
    auto ends = split(item, '>');
    if (ends.size() != 2) throw InputError("tree edges are written tail>head, got \"" + item + "\"");
    edges.emplace_back(ends[0], ends[1]);
  }
  return SpanningTree::from_ids(g, edges);
}

// Kruskal in graph edge order.
SpanningTree first_spanning_tree(const SimplicialGraph& g) {
  std::vector<std::size_t> root(g.vertex_count());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto a = find(static_cast<std::size_t>(g.edge(k).u)), b = find(static_cast<std::size_t>(g.edge(k).v));
    if (a != b) {
      root[a] = b;
      chosen.push_back(k);
    }
  }
  return SpanningTree::canonical(g, chosen);
}

SpanningTree choose_tree(const Loaded& in, const std::string& tree_text) {
  if (!tree_text.empty()) return parse_tree(in.graph, tree_text);
  if (in.tree) return *in.tree;
  if (!is_connected(in.graph)) throw PreconditionError("graph is not connected");
  if (auto t = find_tree_2_spanner(in.graph)) return *t;
  return first_spanning_tree(in.graph);
}

std::string vertex_list(const SimplicialGraph& g, const std::vector<Vertex>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.id(vs[i]);
  return s + "}";
}

std::string coordinate_names(const SpanningTree& t) {
  std::string s;
  const auto ids = t.oriented_ids();
  for (std::size_t k = 0; k < ids.size(); ++k)
    s += (k ? ", " : "") + std::string("y") + std::to_string(k + 1) + " = " + ids[k].first + ">" + ids[k].second;
  return s;
}

std::string equation_text(const IntegerVector& row) {
  std::string s;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == 0) continue;
    Integer c = row[k];
    bool negative = c < 0;
    if (negative) c = -c;
    if (s.empty())
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    if (c != 1) s += to_string(c);
    s += "y" + std::to_string(k + 1);
  }
  return s + " = 0";
}

struct Context {
  std::uint64_t seed = 0;
  CollapseOptions collapse() const { return {10, seed}; }
};

int cmd_analyze(const Context& ctx, const std::string& graph, bool json) {
  Loaded in = load(graph);
  const SimplicialGraph& g = in.graph;
  FlagComplex fc(g);
  nlohmann::json out = {{"vertices", g.vertex_count()},
                        {"edges", g.edge_count()},
                        {"triangles", fc.count(2)},
                        {"dimension", fc.dimension()},
                        {"connected", g.vertex_count() > 0 && is_connected(g)}};
  if (out["connected"].get<bool>()) {
    out["simple_connectivity"] = connectivity_to_json(g, simple_connectivity(fc, ctx.collapse()));
    if (g.vertex_count() >= 2) out["biconnected"] = is_biconnected(g).biconnected;
  }
  if (fc.dimension() == 2) {
    auto b = classify_boundary(fc);
    out["boundary"] = {{"boundary_edges", b.boundary_edges.size()},
                       {"interior_edges", b.interior_edges.size()},
                       {"interior_vertices", vertex_list(g, b.interior_vertices)}};
  }
  if (fc.dimension() >= 2) {
    nlohmann::json crowned = nlohmann::json::array();
    for (const auto& t : crowned_triangles(fc)) crowned.push_back(vertex_list(g, t));
    out["crowned_triangles"] = crowned;
  }
  if (json) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count() << "\ntriangles: " << fc.count(2)
            << "\ndimension: " << fc.dimension() << "\n";
  if (out.contains("simple_connectivity")) {
    const auto& sc = out["simple_connectivity"];
    std::cout << "H1: rank " << sc["h1"]["rank"] << ", torsion " << sc["h1"]["torsion"].dump() << "\n";
    std::cout << "simple connectivity: " << sc["verdict"].get<std::string>() << "\n";
  } else {
    std::cout << "connected: no\n";
  }
  if (out.contains("biconnected")) std::cout << "biconnected: " << (out["biconnected"].get<bool>() ? "yes" : "no") << "\n";
  if (out.contains("boundary"))
    std::cout << "boundary edges: " << out["boundary"]["boundary_edges"] << ", interior edges: "
              << out["boundary"]["interior_edges"] << ", interior vertices: "
              << out["boundary"]["interior_vertices"].get<std::string>() << "\n";
  if (out.contains("crowned_triangles")) std::cout << "crowned triangles: " << out["crowned_triangles"].dump() << "\n";
  return kOk;
}

void print_verdict(const RecognitionVerdict& v, int indent) {
  const SimplicialGraph& g = v.graph;
  std::string pad(static_cast<std::size_t>(indent), ' ');
  std::cout << pad << to_string(v.status) << "  " << vertex_list(g, g.all_vertices()) << "\n";
  if (!v.note.empty()) std::cout << pad << "  note: " << v.note << "\n";
  if (v.raag) {
    std::cout << pad << "  tree 2-spanner: " << coordinate_names(v.raag->tree) << "\n";
    const auto& d = v.raag->dual.graph;
    std::cout << pad << "  dual graph: " << d.vertex_count() << " vertices, " << d.edge_count() << " edges:";
    for (const Edge& e : d.edges()) std::cout << " [" << d.id(e.u) << " " << d.id(e.v) << "]";
    std::cout << "\n";
  }
  if (v.witness) {
    const auto& w = *v.witness;
    std::cout << pad << "  redundant triangle " << vertex_list(w.graph, {w.v[0], w.v[1], w.v[2]}) << " with separators";
    for (const auto& l : w.lambda) std::cout << " " << vertex_list(w.graph, l.vertices());
    std::cout << "\n" << pad << "  iep3 = " << w.report.iep3_value << ", dim of sum = " << w.report.sum_dim << "\n";
  }
  if (v.connectivity && v.connectivity->verdict == Connectivity::kNotSimplyConnected)
    std::cout << pad << "  nontrivial cycle: " << vertex_list(g, v.connectivity->cycle) << "\n";
  for (const auto& p : v.parts) print_verdict(p, indent + 2);
}

int cmd_recognize(const Context& ctx, const std::string& graph, bool json) {
  Loaded in = load(graph);
  RecognitionVerdict v = recognize(in.graph, ctx.collapse());
  if (json)
    std::cout << verdict_to_json(v).dump(2) << "\n";
  else
    print_verdict(v, 0);
  return kOk;
}

std::vector<Rational> parse_values(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

int cmd_bns(const Context& ctx, const std::string& graph, const std::string& tree_text,
            const std::string& character_text, bool json, bool dot) {
  Loaded in = load(graph);
  SpanningTree t = choose_tree(in, tree_text);
  BnsModel model(in.graph, ctx.collapse());
  if (!model.applicable()) throw HypothesisError("bns: " + model.note());
  if (!character_text.empty()) {
    BbgCharacter chi(t, parse_values(character_text));
    MembershipResult r = model.membership(chi);
    EdgeVanishing v = dead_edge_subgraph(chi);
    if (dot) {
      std::cout << to_dot(in.graph, {t.graph_edge_indices(), v.dead});
      return kOk;
    }
    if (json) {
      nlohmann::json out = {{"character", character_to_json(chi)}, {"membership", to_string(r.status)}};
      nlohmann::json dead = nlohmann::json::array();
      for (std::size_t k : v.dead) dead.push_back(in.graph.edge_label(in.graph.edge(k)));
      out["dead_edges"] = dead;
      if (r.dead_separator) out["dead_separator"] = r.dead_separator->vertex_ids();
      std::cout << out.dump(2) << "\n";
      return kOk;
    }
    std::cout << to_string(r.status);
    if (r.dead_separator) std::cout << ", dead separator " << vertex_list(in.graph, r.dead_separator->vertices());
    std::cout << "\ndead edges:";
    for (std::size_t k : v.dead) std::cout << " " << in.graph.edge_label(in.graph.edge(k));
    std::cout << "\n";
    return kOk;
  }
  auto arrangement = model.arrangement(t);
  if (json) {
    std::cout << arrangement_to_json(t, arrangement).dump(2) << "\n";
    return kOk;
  }
  std::cout << "coordinates: " << coordinate_names(t) << "\n";
  std::cout << arrangement.size() << " missing subspheres\n";
  for (const auto& m : arrangement) {
    std::cout << "separator " << vertex_list(in.graph, m.separator.vertices()) << " (dim " << m.subspace.dim() << "):";
    for (const auto& row : m.equations) std::cout << "  " << equation_text(row);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_spanner(const std::string& graph, bool dot) {
  Loaded in = load(graph);
  if (!is_connected(in.graph)) throw PreconditionError("spanner: graph is not connected");
  SpannerSearchStats stats;
  auto t = find_tree_2_spanner(in.graph, &stats);
  if (dot) {
    std::cout << to_dot(in.graph, {t ? t->graph_edge_indices() : std::vector<std::size_t>{}, {}});
    return kOk;
  }
  if (!t) {
    std::cout << "no tree 2-spanner (" << stats.nodes << " search nodes)\n";
    return kOk;
  }
  std::cout << "tree 2-spanner found (" << stats.nodes << " search nodes)\n" << coordinate_names(*t) << "\n";
  DualGraph d = dual_graph(in.graph, *t);
  std::cout << "dual graph:";
  for (const Edge& e : d.graph.edges()) std::cout << " [" << d.graph.id(e.u) << " " << d.graph.id(e.v) << "]";
  std::cout << "\n";
  return kOk;
}

int cmd_presentation(const Context& ctx, const std::string& graph, const std::string& kind,
                     const std::string& tree_text, bool json) {
  Loaded in = load(graph);
  if (!is_connected(in.graph)) throw PreconditionError("presentation: graph is not connected");
  FlagComplex fc(in.graph);
  GroupPresentation p;
  if (kind == "raag") {
    std::optional<SpanningTree> t = tree_text.empty() ? find_tree_2_spanner(in.graph) : parse_tree(in.graph, tree_text);
    if (!t) throw HypothesisError("presentation: no tree 2-spanner, so no RAAG presentation");
    p = raag_presentation(fc, *t);
  } else {
    auto sc = simple_connectivity(fc, ctx.collapse());
    p = kind == "dl" ? dicks_leary(fc, sc) : tree_simplified(fc, sc, choose_tree(in, tree_text));
  }
  if (json) {
    std::cout << presentation_to_json(p, in.graph).dump(2) << "\n";
    return kOk;
  }
  std::cout << to_text(p) << "\n";
  for (const auto& gen : p.generators)
    if (gen.edge) std::cout << "  " << gen.name << " = " << in.graph.id(gen.edge->tail) << ">" << in.graph.id(gen.edge->head) << "\n";
  std::cout << "abelianization rank " << abelianization(p).rank << "\n";
  return kOk;
}

int cmd_contract(const std::string& graph) {
  Loaded in = load(graph);
  SimplicialGraph c = odd_contraction(in.graph, in.weights);
  std::cout << graph_to_json(c).dump(2) << "\n";
  return kOk;
}

int cmd_suite(const Context& ctx) {
  int failed = 0;
  auto results = suite::run_acceptance({ctx.seed}, [&](const suite::CriterionResult& r) {
    std::cout << suite::format_result(r) << std::endl;
    failed += !r.pass;
  });
  std::cout << "paper-suite: ";
  if (failed)
    std::cout << "FAILED (" << failed << " of " << results.size() << ")\n";
  else
    std::cout << "all " << results.size() << " passed\n";
  return failed ? kSuiteFailure : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide whether the Bestvina-Brady group of a graph is a right-angled Artin group"};
  app.require_subcommand(1);
  Context ctx;
  if (const char* env = std::getenv("BBGKIT_SEED")) ctx.seed = std::strtoull(env, nullptr, 10);
  app.add_option("--seed", ctx.seed, "Seed for randomized collapse restarts and the suite (env BBGKIT_SEED)");

  std::string graph, tree, character, kind = "tree";
  bool json = false, dot = false;
  auto graph_arg = [&](CLI::App* sub) {
    sub->add_option("graph", graph, "Fixture name (see `fixtures`) or path to a graph JSON file")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "Flag complex statistics, H1, connectivity and boundary");
  graph_arg(analyze);
  analyze->add_flag("--json", json, "Emit JSON");

  auto* recognize_cmd = app.add_subcommand("recognize", "RAAG / not-Artin verdict with certificate");
  graph_arg(recognize_cmd);
  recognize_cmd->add_flag("--json", json, "Emit the verdict JSON");

  auto* bns = app.add_subcommand("bns", "Missing subspheres of the BNS invariant, or membership of a character");
  graph_arg(bns);
  bns->add_option("--tree", tree, "Oriented tree edges tail>head, comma separated, in coordinate order");
  bns->add_option("--character", character, "Values on the tree edges, comma separated rationals (p, p/q, decimals)");
  bns->add_flag("--json", json, "Emit JSON");
  bns->add_flag("--dot", dot, "With --character: DOT with tree edges red and dead edges dashed");

  auto* spanner = app.add_subcommand("spanner", "Search for a tree 2-spanner and print its dual graph");
  graph_arg(spanner);
  spanner->add_flag("--dot", dot, "DOT with the spanner edges red");

  auto* presentation = app.add_subcommand("presentation", "Presentation of the Bestvina-Brady group");
  graph_arg(presentation);
  presentation->add_option("--kind", kind, "dl, tree or raag")->check(CLI::IsMember({"dl", "tree", "raag"}));
  presentation->add_option("--tree", tree, "Oriented tree edges tail>head for --kind tree or raag");
  presentation->add_flag("--json", json, "Emit JSON");

  auto* contract = app.add_subcommand("contract", "Odd contraction of an edge-weighted graph JSON file");
  graph_arg(contract);

  auto* fixtures = app.add_subcommand("fixtures", "List built-in graphs");
  auto* paper_suite = app.add_subcommand("paper-suite", "Run every acceptance check; exit 1 on any failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(ctx, graph, json);
    if (recognize_cmd->parsed()) return cmd_recognize(ctx, graph, json);
    if (bns->parsed()) return cmd_bns(ctx, graph, tree, character, json, dot);
    if (spanner->parsed()) return cmd_spanner(graph, dot);
    if (presentation->parsed()) return cmd_presentation(ctx, graph, kind, tree, json);
    if (contract->parsed()) return cmd_contract(graph);
    if (fixtures->parsed()) {
      for (const auto& name : fixture_names()) std::cout << name << "  " << fixture(name).description << "\n";
      std::cout << "c<n>, k<n>, path<n>, fan<n>, cone:<name>  generated families\n";
      return kOk;
    }
    if (paper_suite->parsed()) return cmd_suite(ctx);
  } catch (const HypothesisError& e) {
    std::cerr << "hypothesis not certified: " << e.what() << "\n";
    return kHypothesis;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kInputError;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}
