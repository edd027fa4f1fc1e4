#include "bbgkit_suite/acceptance.hpp"

#include <chrono>
#include <set>
#include <sstream>

#include "bbgkit/bns.hpp"
#include "bbgkit/error.hpp"
#include "bbgkit/fixtures.hpp"
#include "bbgkit/presentation.hpp"
#include "bbgkit/recognition.hpp"
#include "bbgkit/subspace.hpp"
#include "bbgkit_suite/generators.hpp"
#include "bbgkit_suite/oracles.hpp"

namespace bbg::suite {

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string first;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  CriterionResult result(int id, std::string title, const std::string& extra = {}) const {
    std::ostringstream os;
    os << checked << " checks, " << failures << " failures";
    if (!extra.empty()) os << "; " << extra;
    if (failures) os << "; first: " << first;
    return {id, std::move(title), failures == 0 && checked > 0, os.str(), 0};
  }
};

Rng make_rng(const SuiteOptions& options, std::uint64_t stream) {
  std::seed_seq seq{options.seed, stream};
  return Rng(seq);
}

IntegerMatrix rows(std::initializer_list<std::initializer_list<long>> list) {
  IntegerMatrix out;
  for (const auto& r : list) {
    IntegerVector row;
    for (long x : r) row.emplace_back(x);
    out.push_back(std::move(row));
  }
  return out;
}

// All equation rows of an arrangement, one subsphere per row expected.
bool arrangement_matches(const std::string& name, IntegerMatrix expected, Tally& tally) {
  Fixture f = fixture(name);
  SpanningTree t = *f.spanning_tree();
  auto arrangement = bns_complement_arrangement(f.graph, t);
  IntegerMatrix got;
  for (const auto& m : arrangement) {
    tally.check(m.equations.size() == 1, name + ": a subsphere is not a hyperplane");
    got.insert(got.end(), m.equations.begin(), m.equations.end());
  }
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  tally.check(got == expected, name + ": equation rows differ");
  return got == expected;
}

struct Certified {
  Fixture fixture;
  SpanningTree tree;
};

SpanningTree tree_for(const Fixture& f, Rng& rng) {
  if (auto t = f.spanning_tree()) return *t;
  if (auto t = find_tree_2_spanner(f.graph)) return *t;
  return random_spanning_tree(f.graph, rng);
}

std::vector<Certified> certified_fixtures(Rng& rng) {
  std::vector<Certified> out;
  for (const auto& name : fixture_pool()) {
    Fixture f = fixture(name);
    if (!BnsModel(f.graph).applicable()) continue;
    SpanningTree t = tree_for(f, rng);
    out.push_back({std::move(f), std::move(t)});
  }
  return out;
}

}  // namespace

std::vector<std::string> fixture_pool() {
  std::vector<std::string> out = fixture_names();
  for (const char* extra : {"cone:trefoil", "cone:extended_trefoil", "cone:c4", "cone:c5", "k4", "k5", "fan4",
                            "fan6", "path3", "c5"})
    out.emplace_back(extra);
  return out;
}

CriterionResult trefoil_arrangement(const SuiteOptions&) {
  Tally tally;
  arrangement_matches("trefoil", rows({{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {1, -1, 0, 0, 0}}), tally);
  return tally.result(1, "trefoil BNS complement: y1=0, y2=0, y1-y2=0");
}

CriterionResult extended_trefoil_arrangement(const SuiteOptions&) {
  Tally tally;
  arrangement_matches("extended_trefoil",
                      rows({{1, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {1, -1, 0, 0, 0, 0}, {0, 0, 0, 0, 1, 0}}), tally);
  return tally.result(2, "extended trefoil BNS complement: y1=0, y2=0, y1-y2=0, y5=0");
}

CriterionResult trefoil_iep_failure(const SuiteOptions&) {
  Tally tally;
  Fixture f = fixture("trefoil");
  const SimplicialGraph& g = f.graph;
  SpanningTree t = *f.spanning_tree();
  auto arrangement = bns_complement_arrangement(g, t);
  auto subspace_of = [&](const VertexSet& s) {
    for (const auto& m : arrangement)
      if (m.separator.vertices() == s) return m.subspace;
    throw InvariantViolation("separator missing from the trefoil arrangement");
  };
  auto w1 = subspace_of(make_vertex_set({g.vertex("2"), g.vertex("5")}));
  auto w2 = subspace_of(make_vertex_set({g.vertex("3"), g.vertex("5")}));
  auto w3 = subspace_of(make_vertex_set({g.vertex("2"), g.vertex("3")}));
  long long value = iep3(w1, w2, w3);
  std::size_t sum_dim = sum(sum(w1, w2), w3).dim();
  tally.check(value == 6, "iep3 is " + std::to_string(value));
  tally.check(sum_dim == 5, "sum has dimension " + std::to_string(sum_dim));
  auto report = redundant_triple_test(w1, w2, w3, 0, 1);
  tally.check(report.is_redundant, "triple reported non-redundant");
  tally.check(report.iep3_value == 6 && report.sum_dim == 5 && report.inequality_holds, "report fields differ");
  tally.check(!iep_check({w1, w2, w3}).equal(), "inclusion-exclusion holds");
  return tally.result(3, "trefoil inclusion-exclusion failure: iep3 = 6, dim sum = 5, redundant",
                      "iep3=" + std::to_string(value) + " sum=" + std::to_string(sum_dim));
}

CriterionResult recognition_verdicts(const SuiteOptions&) {
  Tally tally;
  auto status_is = [&](const std::string& name, Verdict expected) {
    RecognitionVerdict v = recognize(fixture(name).graph);
    tally.check(v.status == expected, name + " gave " + to_string(v.status));
    if (v.raag) tally.check(verify_tree_2_spanner(v.graph, v.raag->tree).ok, name + ": spanner does not verify");
    if (v.witness) tally.check(verify_redundant_triangle_witness(*v.witness).ok, name + ": witness does not verify");
    if (v.status == Verdict::kRaag) tally.check(v.raag.has_value(), name + ": RAAG without certificate");
    if (v.status == Verdict::kNotRaagNotArtin) tally.check(v.witness.has_value(), name + ": no witness");
    return v;
  };
  status_is("trefoil", Verdict::kNotRaagNotArtin);
  status_is("extended_trefoil", Verdict::kNotRaagNotArtin);
  auto a = status_is("fig6a", Verdict::kRaag);
  auto b = status_is("fig6b", Verdict::kRaag);
  if (a.raag && b.raag) {
    tally.check(are_isomorphic(a.raag->dual.graph, path_graph(5)), "fig6a dual is not P5");
    tally.check(are_isomorphic(b.raag->dual.graph, path_graph(5)), "fig6b dual is not P5");
    tally.check(graphs_define_isomorphic_bbgs(a.graph, a.raag->tree, b.graph, b.raag->tree),
                "fig6a and fig6b not identified");
  }
  auto cone = status_is("cone:trefoil", Verdict::kRaag);
  if (cone.raag) tally.check(are_isomorphic(cone.raag->dual.graph, fixture("trefoil").graph), "cone dual is not the trefoil");
  status_is("fig13_3dim", Verdict::kNotRaagNotArtin);
  {
    const SimplicialGraph g = fixture("fig13_3dim").graph;
    auto vs = [&](std::initializer_list<const char*> ids) {
      std::vector<Vertex> out;
      for (const char* id : ids) out.push_back(g.vertex(id));
      return make_vertex_set(out);
    };
    auto w = build_redundant_triangle_witness(g, {g.vertex("v1"), g.vertex("v2"), g.vertex("v3")},
                                              {vs({"u", "v2", "v3"}), vs({"u", "v1", "v3"}), vs({"v1", "v2", "w"})});
    tally.check(verify_redundant_triangle_witness(w).ok, "fig13 separators rejected by the verifier");
  }
  status_is("c4", Verdict::kNotFinitelyPresented);
  auto right = status_is("fig9_right", Verdict::kRaag);
  tally.check(right.parts.size() == 2, "fig9_right was not split into two blocks");
  status_is("fig5_bouquet", Verdict::kRaag);
  return tally.result(4, "recognition verdicts on the catalog");
}

CriterionResult membership_cross_validation(const SuiteOptions& options) {
  Tally tally;
  Rng rng = make_rng(options, 5);
  std::size_t fixtures = 0, outside = 0;
  for (const auto& c : certified_fixtures(rng)) {
    if (c.tree.size() == 0) continue;
    ++fixtures;
    BnsModel model(c.fixture.graph);
    for (int i = 0; i < 500; ++i) {
      BbgCharacter chi = random_character(c.tree, rng);
      bool by_separators = !model.dead_separator(chi).has_value();
      bool by_extensions = model.member_by_extensions(chi);
      tally.check(by_separators == by_extensions, c.fixture.name + ": paths disagree on character " + std::to_string(i));
      tally.check(by_separators == !model.dead_separator(chi.negated()).has_value(),
                  c.fixture.name + ": membership not antipodally symmetric");
      outside += !by_separators;
    }
  }
  return tally.result(5, "membership: separator test agrees with extension sweep",
                      std::to_string(fixtures) + " fixtures, " + std::to_string(outside) + " characters outside");
}

CriterionResult spanner_crown_equivalence(const SuiteOptions& options) {
  Tally tally;
  Rng rng = make_rng(options, 6);
  std::size_t with_crown = 0, without = 0;
  auto test = [&](const SimplicialGraph& g, const std::string& label) {
    FlagComplex fc(g);
    bool spanner = find_tree_2_spanner(g).has_value();
    bool crowned = !crowned_triangles(fc).empty();
    (crowned ? with_crown : without)++;
    tally.check(spanner != crowned, label + ": spanner " + (spanner ? "found" : "absent") + " but crowned triangles " +
                                        (crowned ? "present" : "absent"));
    if (!spanner) tally.check(find_redundant_triangle(g).has_value(), label + ": no redundant triangle");
  };
  for (const auto& name : fixture_pool()) {
    Fixture f = fixture(name);
    if (!BnsModel(f.graph).applicable() || FlagComplex(f.graph).dimension() != 2) continue;
    test(f.graph, name);
  }
  for (int i = 0; i < 200; ++i) {
    int n = std::uniform_int_distribution<int>(4, 14)(rng);
    auto policy = i % 2 ? CrownPolicy::kForce : CrownPolicy::kAvoid;
    test(random_2tree(n, policy, rng), "random 2-tree " + std::to_string(i));
  }
  tally.check(with_crown > 0 && without > 0, "corpus lacks one of the two classes");
  return tally.result(6, "tree 2-spanner exists iff no crowned triangle (dimension 2)",
                      std::to_string(without) + " crown-free, " + std::to_string(with_crown) + " crowned");
}

CriterionResult arrangement_battery(const SuiteOptions& options) {
  Tally tally;
  Rng rng = make_rng(options, 7);

  // RAAG arrangements: coordinate subspaces x_s = 0 for s in each separator.
  int graphs = 0;
  while (graphs < 50) {
    int n = std::uniform_int_distribution<int>(4, 8)(rng);
    SimplicialGraph g = random_connected_graph(n, 0.35, rng);
    auto separators = minimal_full_separating_subgraphs(g);
    if (separators.empty() || separators.size() > 12) continue;
    ++graphs;
    std::vector<RationalSubspace> ws;
    for (const auto& s : separators) {
      RationalMatrix eqs;
      for (Vertex v : s.vertices()) {
        RationalVector row(g.vertex_count(), Rational(0));
        row[static_cast<std::size_t>(v)] = 1;
        eqs.push_back(std::move(row));
      }
      ws.push_back(RationalSubspace::from_equations(g.vertex_count(), std::move(eqs)));
    }
    tally.check(iep_check(ws).equal(), "RAAG arrangement violates inclusion-exclusion");
  }

  std::size_t redundant = 0, non_redundant = 0;
  auto record = [&](const RedundantTripleReport& r, const std::string& label) {
    if (r.is_redundant) {
      ++redundant;
      tally.check(r.inequality_holds, label + ": redundant triple with iep3 <= dim sum");
    } else {
      ++non_redundant;
      tally.check(r.dichotomy == Dichotomy::kAxesInAllComplements || r.dichotomy == Dichotomy::kEngagedAxis,
                  label + ": non-redundant triple violates the dichotomy");
    }
  };

  // Witnesses produced by recognition.
  std::vector<SimplicialGraph> sources;
  for (const auto& name : fixture_pool()) sources.push_back(fixture(name).graph);
  for (int i = 0; i < 30; ++i) {
    int n = std::uniform_int_distribution<int>(6, 12)(rng);
    sources.push_back(random_2tree(n, i % 2 ? CrownPolicy::kForce : CrownPolicy::kAvoid, rng));
  }
  std::size_t witnesses = 0;
  for (const auto& g : sources) {
    RecognitionVerdict v = recognize(g);
    std::vector<const RecognitionVerdict*> all{&v};
    for (const auto& p : v.parts) all.push_back(&p);
    for (const auto* p : all)
      if (p->witness) {
        ++witnesses;
        record(p->witness->report, "witness");
      }
  }

  // Every triple recognition can form on a triangle: any choice of separators
  // in the links through the opposite edges, in adapted coordinates. Shared
  // vertices are allowed, which is where non-redundant triples come from.
  for (const auto& g : sources) {
    BnsModel model(g);
    if (!model.applicable()) continue;
    const FlagComplex fc = build_flag_complex(g, 2);
    for (const Simplex& t : fc.triangles()) {
      const std::array<Vertex, 3> v{t[0], t[1], t[2]};
      auto c = triangle_candidates(g, model.separators(), v);
      std::size_t formed = 0;
      for (const auto& a : c[0])
        for (const auto& b : c[1])
          for (const auto& d : c[2])
            if (formed++ < 64) record(triangle_triple(g, v, {a, b, d}).report, "triangle triple");
    }
  }
  tally.check(redundant > 0 && non_redundant > 0, "corpus lacks redundant or non-redundant triples");
  return tally.result(7, "inclusion-exclusion battery and redundant-triple dichotomy",
                      std::to_string(graphs) + " RAAG arrangements, " + std::to_string(witnesses) + " witnesses, " +
                          std::to_string(redundant) + " redundant and " + std::to_string(non_redundant) +
                          " non-redundant triples");
}

CriterionResult oracle_equivalence(const SuiteOptions& options) {
  Tally tally;
  Rng rng = make_rng(options, 8);
  std::size_t graphs = 0, counted = 0;
  for (int i = 0; i < 300; ++i) {
    int n = std::uniform_int_distribution<int>(3, 9)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    SimplicialGraph g = random_connected_graph(n, p, rng);
    ++graphs;
    std::vector<VertexSet> ours;
    for (const auto& s : minimal_full_separating_subgraphs(g)) ours.push_back(s.vertices());
    tally.check(ours == brute_force_minimal_separators(g), "separators differ on graph " + std::to_string(i));

    std::vector<SpanningTree> trees;
    for (int k = 0; k < 3; ++k) trees.push_back(random_spanning_tree(g, rng));
    if (auto t = find_tree_2_spanner(g)) trees.push_back(*t);
    for (const auto& t : trees)
      tally.check(verify_tree_2_spanner(g, t).ok == all_pairs_spanner_check(g, t),
                  "spanner checks differ on graph " + std::to_string(i));
    if (g.edge_count() <= 13) {
      ++counted;
      std::size_t found = enumerate_tree_2_spanners(g, 100000).size();
      tally.check(found == brute_force_spanner_count(g), "spanner count differs on graph " + std::to_string(i));
      tally.check((found > 0) == find_tree_2_spanner(g).has_value(), "search disagrees with enumeration");
    }
  }
  return tally.result(8, "separators and spanner checks match brute-force oracles",
                      std::to_string(graphs) + " graphs, " + std::to_string(counted) + " spanner counts");
}

CriterionResult fibering(const SuiteOptions& options) {
  Tally tally;
  Rng rng = make_rng(options, 9);
  std::size_t fixtures = 0;
  for (const auto& c : certified_fixtures(rng)) {
    if (c.tree.size() == 0) continue;
    ++fixtures;
    BbgCharacter chi = fibering_character(c.fixture.graph, c.tree);
    tally.check(dead_edge_subgraph(chi).dead.empty(), c.fixture.name + ": fibering character has dead edges");
    BnsModel model(c.fixture.graph);
    tally.check(model.membership(chi).status == Membership::kInSigma, c.fixture.name + ": chi outside");
    tally.check(model.membership(chi.negated()).status == Membership::kInSigma, c.fixture.name + ": -chi outside");
  }
  return tally.result(9, "fibering character is in the BNS invariant with its negative",
                      std::to_string(fixtures) + " fixtures");
}

CriterionResult presentation_consistency(const SuiteOptions& options) {
  Tally tally;
  Rng rng = make_rng(options, 10);
  std::size_t presentations = 0;
  for (const auto& name : fixture_pool()) {
    Fixture f = fixture(name);
    const SimplicialGraph& g = f.graph;
    FlagComplex fc(g);
    auto sc = simple_connectivity(fc);
    if (sc.verdict != Connectivity::kSimplyConnected) continue;
    const std::size_t expected = g.vertex_count() - 1;
    auto rank_ok = [&](const GroupPresentation& p, const char* kind) {
      ++presentations;
      tally.check(abelianization(p).rank == expected, name + ": " + kind + " abelianization rank");
    };
    rank_ok(dicks_leary(fc, sc), "DL");
    rank_ok(tree_simplified(fc, sc, tree_for(f, rng)), "tree");
    if (auto t = find_tree_2_spanner(g)) {
      GroupPresentation p = raag_presentation(fc, *t);
      rank_ok(p, "RAAG");
      DualGraph d = dual_graph(g, *t);
      std::set<Word> expected_relators;
      for (auto [i, j] : d.coordinate_edges)
        expected_relators.insert(commutator({static_cast<int>(i + 1)}, {static_cast<int>(j + 1)}));
      tally.check(p.relators.size() == d.coordinate_edges.size() &&
                      std::set<Word>(p.relators.begin(), p.relators.end()) == expected_relators,
                  name + ": RAAG relators differ from the dual edges");
    }
  }
  return tally.result(10, "presentations: abelianization rank |V|-1, RAAG relators are dual edges",
                      std::to_string(presentations) + " presentations");
}

std::vector<CriterionResult> run_acceptance(const SuiteOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  using Check = CriterionResult (*)(const SuiteOptions&);
  const Check checks[] = {trefoil_arrangement,         extended_trefoil_arrangement, trefoil_iep_failure,
                          recognition_verdicts,        membership_cross_validation,  spanner_crown_equivalence,
                          arrangement_battery,         oracle_equivalence,           fibering,
                          presentation_consistency};
  std::vector<CriterionResult> out;
  int id = 0;
  for (Check check : checks) {
    ++id;
    auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = check(options);
    } catch (const std::exception& e) {
      r = {id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS" : "FAIL") << "  [" << (r.id < 10 ? " " : "") << r.id << "] " << r.title << " (" << r.detail
     << ", " << static_cast<long>(r.seconds * 1000) << " ms)";
  return os.str();
}

}  // namespace bbg::suite
