#include "bbgkit/presentation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "bbgkit/error.hpp"

namespace bbg {

Word free_reduce(Word w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word commutator(const Word& u, const Word& v) {
  Word w = u;
  w.insert(w.end(), v.begin(), v.end());
  Word ui = inverse(u), vi = inverse(v);
  w.insert(w.end(), ui.begin(), ui.end());
  w.insert(w.end(), vi.begin(), vi.end());
  return free_reduce(std::move(w));
}

std::optional<std::pair<Word, Word>> as_commutator(const Word& w) {
  const std::size_t n = w.size();
  if (n < 4 || n % 2 != 0) return std::nullopt;
  for (const Word& base : {w, inverse(w)})
    for (std::size_t r = 0; r < n; ++r) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      for (std::size_t a = 1; 2 * a < n; ++a) {
        std::size_t b = n / 2 - a;
        Word u(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(a));
        Word v(rot.begin() + static_cast<std::ptrdiff_t>(a), rot.begin() + static_cast<std::ptrdiff_t>(a + b));
        if (commutator(u, v) == rot && free_reduce(u) == u && free_reduce(v) == v) return std::pair{u, v};
      }
    }
  return std::nullopt;
}

namespace {

// Lexicographically least rotation of w or its inverse: two relators with the
// same key have the same normal closure.
Word cyclic_key(const Word& w) {
  Word best;
  for (const Word& base : {w, inverse(w)})
    for (std::size_t r = 0; r < base.size(); ++r) {
      Word rot(base.begin() + static_cast<std::ptrdiff_t>(r), base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + static_cast<std::ptrdiff_t>(r));
      if (best.empty() || rot < best) best = std::move(rot);
    }
  return best;
}

// Single-letter commutators normalise to [e_i, e_j] with i < j.
Word normalise(Word w) {
  w = cyclic_reduce(std::move(w));
  if (auto c = as_commutator(w); c && c->first.size() == 1 && c->second.size() == 1) {
    int a = std::abs(c->first[0]), b = std::abs(c->second[0]);
    if (a != b) return commutator({std::min(a, b)}, {std::max(a, b)});
  }
  return w;
}

void require_certified(const SimpleConnectivityStatus& certificate, const char* what) {
  if (certificate.verdict != Connectivity::kSimplyConnected)
    throw HypothesisError(std::string(what) + ": simple connectivity of the flag complex is not certified (" +
                          to_string(certificate.verdict) + ")");
}

void require_connected_base(const FlagComplex& fc, const char* what) {
  if (fc.base().vertex_count() == 0 || !is_connected(fc.base()))
    throw PreconditionError(std::string(what) + " requires a connected graph");
}

// Triangle relators over graph edges oriented from smaller to larger vertex.
std::vector<Word> triangle_relators(const FlagComplex& fc, const std::vector<Word>& edge_word) {
  const SimplicialGraph& g = fc.base();
  std::vector<Word> out;
  for (const Simplex& t : fc.triangles()) {
    const Word& ab = edge_word[g.edge_index_checked(t[0], t[1])];
    const Word& bc = edge_word[g.edge_index_checked(t[1], t[2])];
    Word ca = inverse(edge_word[g.edge_index_checked(t[0], t[2])]);
    Word forward = ab;
    forward.insert(forward.end(), bc.begin(), bc.end());
    forward.insert(forward.end(), ca.begin(), ca.end());
    Word backward = ca;
    backward.insert(backward.end(), bc.begin(), bc.end());
    backward.insert(backward.end(), ab.begin(), ab.end());
    out.push_back(std::move(forward));
    out.push_back(std::move(backward));
  }
  return out;
}

std::vector<Word> tidy(const std::vector<Word>& relators) {
  std::vector<Word> out;
  std::set<Word> keys;
  for (const Word& r : relators) {
    Word w = normalise(r);
    if (w.empty()) continue;
    if (keys.insert(cyclic_key(w)).second) out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

Abelianization abelianization(const GroupPresentation& p) {
  const std::size_t n = p.generators.size();
  IntegerMatrix m;
  for (const Word& r : p.relators) {
    IntegerVector row(n, Integer(0));
    for (int x : r) row[static_cast<std::size_t>(std::abs(x) - 1)] += x > 0 ? 1 : -1;
    m.push_back(std::move(row));
  }
  SmithForm snf = smith_normal_form(std::move(m), n);
  Abelianization out;
  out.rank = n - snf.rank;
  for (const auto& d : snf.divisors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

std::string word_to_string(const GroupPresentation& p, const Word& w) {
  auto letters = [&](const Word& word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i) s += ' ';
      s += p.generators.at(static_cast<std::size_t>(std::abs(word[i]) - 1)).name;
      if (word[i] < 0) s += "^-1";
    }
    return s;
  };
  if (auto c = as_commutator(w)) return "[" + letters(c->first) + ", " + letters(c->second) + "]";
  return letters(w);
}

std::string to_text(const GroupPresentation& p) {
  std::ostringstream os;
  os << "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) os << (i ? ", " : "") << p.generators[i].name;
  os << " |";
  for (std::size_t i = 0; i < p.relators.size(); ++i) os << (i ? ", " : " ") << word_to_string(p, p.relators[i]);
  os << " >";
  return os.str();
}

const char* to_string(PresentationKind kind) {
  switch (kind) {
    case PresentationKind::kDicksLeary:
      return "DICKS_LEARY";
    case PresentationKind::kTreeSimplified:
      return "TREE_SIMPLIFIED";
    case PresentationKind::kRaagStandard:
      return "RAAG_STANDARD";
  }
  return "DICKS_LEARY";
}

GroupPresentation dicks_leary(const FlagComplex& fc, const SimpleConnectivityStatus& certificate) {
  require_connected_base(fc, "dicks_leary");
  require_certified(certificate, "dicks_leary");
  const SimplicialGraph& g = fc.base();
  GroupPresentation p;
  p.kind = PresentationKind::kDicksLeary;
  std::vector<Word> edge_word;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    p.generators.push_back({"x" + std::to_string(k + 1), OrientedEdge{g.edge(k).u, g.edge(k).v}});
    edge_word.push_back({static_cast<int>(k + 1)});
  }
  for (Word& r : triangle_relators(fc, edge_word)) p.relators.push_back(free_reduce(std::move(r)));
  return p;
}

GroupPresentation tree_simplified(const FlagComplex& fc, const SimpleConnectivityStatus& certificate,
                                  const SpanningTree& t) {
  require_connected_base(fc, "tree_simplified");
  require_certified(certificate, "tree_simplified");
  const SimplicialGraph& g = fc.base();
  if (!(t.parent() == g)) throw InputError("tree_simplified: tree belongs to another graph");

  GroupPresentation p;
  p.kind = PresentationKind::kTreeSimplified;
  for (std::size_t k = 0; k < t.size(); ++k) p.generators.push_back({"e" + std::to_string(k + 1), t.edge(k)});

  // The edge x -> y equals y x^-1 in the ambient RAAG; along the tree path
  // x = p0, ..., pk = y that telescopes as (pk pk-1^-1) ... (p1 p0^-1).
  std::vector<Word> edge_word(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const Edge& e = g.edge(k);
    auto path = t.path(e.u, e.v);
    Word w;
    for (std::size_t i = path.size() - 1; i > 0; --i) {
      std::size_t c = *t.coordinate_of(*g.edge_index(path[i - 1], path[i]));
      int letter = static_cast<int>(c + 1);
      w.push_back(t.edge(c).tail == path[i - 1] ? letter : -letter);
    }
    edge_word[k] = std::move(w);
  }
  p.relators = tidy(triangle_relators(fc, edge_word));
  return p;
}

GroupPresentation raag_presentation(const FlagComplex& fc, const SpanningTree& t) {
  DualGraph dual = dual_graph(fc.base(), t);
  GroupPresentation p;
  p.kind = PresentationKind::kRaagStandard;
  for (std::size_t k = 0; k < t.size(); ++k) p.generators.push_back({"e" + std::to_string(k + 1), t.edge(k)});
  for (const auto& [i, j] : dual.coordinate_edges)
    p.relators.push_back(commutator({static_cast<int>(i + 1)}, {static_cast<int>(j + 1)}));

  // Cross-check against the presentation of A(dual) after relabelling.
  GroupPresentation a = raag_of_graph(dual.graph);
  std::set<std::pair<std::size_t, std::size_t>> from_dual;
  std::vector<std::size_t> coordinate_of_vertex(dual.graph.vertex_count());
  for (std::size_t k = 0; k < dual.vertex_of_coordinate.size(); ++k)
    coordinate_of_vertex[static_cast<std::size_t>(dual.vertex_of_coordinate[k])] = k;
  for (const Word& r : a.relators) {
    std::size_t x = coordinate_of_vertex[static_cast<std::size_t>(r[0] - 1)];
    std::size_t y = coordinate_of_vertex[static_cast<std::size_t>(r[1] - 1)];
    from_dual.emplace(std::min(x, y), std::max(x, y));
  }
  require(from_dual == std::set<std::pair<std::size_t, std::size_t>>(dual.coordinate_edges.begin(),
                                                                     dual.coordinate_edges.end()),
          "RAAG presentation disagrees with the dual graph");
  return p;
}

GroupPresentation raag_of_graph(const SimplicialGraph& g) {
  GroupPresentation p;
  p.kind = PresentationKind::kRaagStandard;
  for (const auto& id : g.ids()) p.generators.push_back({id, std::nullopt});
  for (const Edge& e : g.edges()) p.relators.push_back(commutator({e.u + 1}, {e.v + 1}));
  return p;
}

SimplicialGraph odd_contraction(const SimplicialGraph& g, const EdgeWeights& weights) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto it = weights.find(k);
    if (it == weights.end()) throw InputError("odd_contraction: edge " + g.edge_label(g.edge(k)) + " has no weight");
    if (it->second < 1) throw InputError("odd_contraction: weights must be positive");
    if (it->second % 2 == 1) {
      auto a = find(static_cast<std::size_t>(g.edge(k).u)), b = find(static_cast<std::size_t>(g.edge(k).v));
      root[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<VertexId>> classes;
  for (std::size_t v = 0; v < n; ++v) classes[find(v)].push_back(g.id(static_cast<Vertex>(v)));
  std::map<std::size_t, VertexId> name;
  std::vector<VertexId> ids;
  for (const auto& [r, members] : classes) {
    std::string label = "{";
    for (std::size_t i = 0; i < members.size(); ++i) label += (i ? "," : "") + members[i];
    name[r] = label + "}";
    ids.push_back(name[r]);
  }
  std::set<std::pair<VertexId, VertexId>> edges;
  for (const Edge& e : g.edges()) {
    auto a = find(static_cast<std::size_t>(e.u)), b = find(static_cast<std::size_t>(e.v));
    if (a != b) edges.emplace(std::min(name[a], name[b]), std::max(name[a], name[b]));
  }
  return SimplicialGraph(ids, {edges.begin(), edges.end()});
}

}  // namespace bbg
