#include "bbgkit/flag_complex.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <set>

#include "bbgkit/error.hpp"

namespace bbg {

FlagComplex::FlagComplex(SimplicialGraph base, std::optional<std::size_t> max_dim) : base_(std::move(base)) {
  const std::size_t n = base_.vertex_count();
  if (n == 0) return;
  std::vector<Simplex> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back({static_cast<Vertex>(v)});
  levels_.push_back(std::move(vertices));

  while (true) {
    const std::size_t k = levels_.size();  // building level k
    if (max_dim && k > *max_dim) {
      // Probe whether anything was cut off.
      const auto& top = levels_.back();
      truncated_ = std::any_of(top.begin(), top.end(), [&](const Simplex& s) {
        for (Vertex w = s.back() + 1; static_cast<std::size_t>(w) < n; ++w)
          if (std::all_of(s.begin(), s.end(), [&](Vertex x) { return base_.adjacent(x, w); })) return true;
        return false;
      });
      break;
    }
    std::vector<Simplex> next;
    for (const Simplex& s : levels_.back())
      for (Vertex w : base_.neighbors(s.back())) {
        if (w <= s.back()) continue;
        if (!std::all_of(s.begin(), s.end() - 1, [&](Vertex x) { return base_.adjacent(x, w); })) continue;
        Simplex t = s;
        t.push_back(w);
        next.push_back(std::move(t));
      }
    if (next.empty()) break;
    levels_.push_back(std::move(next));
  }

  index_.resize(levels_.size());
  for (std::size_t k = 0; k < levels_.size(); ++k)
    for (std::size_t i = 0; i < levels_[k].size(); ++i) index_[k].emplace(levels_[k][i], i);

  edge_triangles_.assign(base_.edge_count(), {});
  if (levels_.size() > 2)
    for (std::size_t t = 0; t < levels_[2].size(); ++t) {
      const Simplex& s = levels_[2][t];
      edge_triangles_[base_.edge_index_checked(s[0], s[1])].push_back(t);
      edge_triangles_[base_.edge_index_checked(s[0], s[2])].push_back(t);
      edge_triangles_[base_.edge_index_checked(s[1], s[2])].push_back(t);
    }
}

const std::vector<Simplex>& FlagComplex::level(std::size_t k) const {
  static const std::vector<Simplex> kEmpty;
  return k < levels_.size() ? levels_[k] : kEmpty;
}

std::optional<std::size_t> FlagComplex::find(const Simplex& s) const {
  if (s.empty() || s.size() > index_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

const std::vector<std::size_t>& FlagComplex::triangles_on_edge(std::size_t edge) const {
  return edge_triangles_.at(edge);
}

long long FlagComplex::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t k = 0; k < levels_.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(levels_[k].size());
  return chi;
}

FlagComplex build_flag_complex(const SimplicialGraph& g, std::optional<std::size_t> max_dim) {
  return FlagComplex(g, max_dim);
}

BoundaryClassification classify_boundary(const FlagComplex& fc) {
  if (fc.dimension() != 2)
    throw PreconditionError("classify_boundary requires a 2-dimensional flag complex, got dimension " +
                            std::to_string(fc.dimension()));
  const SimplicialGraph& g = fc.base();
  BoundaryClassification out;
  std::vector<char> on_boundary(g.vertex_count(), 0);
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    if (fc.triangles_on_edge(k).size() == 1) {
      out.boundary_edges.push_back(k);
      on_boundary[g.edge(k).u] = on_boundary[g.edge(k).v] = 1;
    }
  for (std::size_t k = 0; k < g.edge_count(); ++k)
    if (!on_boundary[g.edge(k).u] && !on_boundary[g.edge(k).v]) out.interior_edges.push_back(k);
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    (on_boundary[v] ? out.boundary_vertices : out.interior_vertices).push_back(static_cast<Vertex>(v));
  return out;
}

IntegerMatrix boundary_matrix(const FlagComplex& fc, std::size_t k) {
  if (k == 0) throw PreconditionError("boundary_matrix: degree must be positive");
  const auto& rows = fc.level(k - 1);
  const auto& cols = fc.level(k);
  IntegerMatrix m(rows.size(), IntegerVector(cols.size(), Integer(0)));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t omit = 0; omit < cols[j].size(); ++omit) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(omit));
      m[*fc.find(face)][j] = (omit % 2 == 0) ? 1 : -1;
    }
  return m;
}

HomologyGroup homology(const FlagComplex& fc, std::size_t k) {
  if (fc.truncated() && k + 1 >= fc.level_count())
    throw PreconditionError("homology: the complex was truncated below degree " + std::to_string(k + 1));
  const std::size_t nk = fc.count(k);
  std::size_t rank_k = 0;
  if (k > 0 && nk > 0) rank_k = smith_normal_form(boundary_matrix(fc, k), nk).rank;
  HomologyGroup out;
  SmithForm next;
  if (fc.count(k + 1) > 0) next = smith_normal_form(boundary_matrix(fc, k + 1), fc.count(k + 1));
  out.rank = nk - rank_k - next.rank;
  for (const auto& d : next.divisors)
    if (d > 1) out.torsion.push_back(d);
  return out;
}

namespace {

// Closed walk certifying H1 != 0: the first fundamental cycle of a BFS tree
// that is not an integral boundary.
std::vector<Vertex> nontrivial_cycle(const FlagComplex& fc) {
  const SimplicialGraph& g = fc.base();
  const std::size_t n = g.vertex_count(), m = g.edge_count();
  IntegerLattice boundaries(m);
  for (const auto& column : [&] {
         IntegerMatrix d2 = boundary_matrix(fc, 2);
         IntegerMatrix cols(fc.count(2), IntegerVector(m, Integer(0)));
         for (std::size_t e = 0; e < m; ++e)
           for (std::size_t t = 0; t < fc.count(2); ++t) cols[t][e] = d2[e][t];
         return cols;
       }())
    boundaries.add(column);

  std::vector<Vertex> parent(n, -1), depth(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[i];
        depth[w] = depth[order[i]] + 1;
        order.push_back(w);
      }

  for (std::size_t k = 0; k < m; ++k) {
    const Edge& e = g.edge(k);
    if (parent[e.v] == e.u || parent[e.u] == e.v) continue;
    // Walk u -> ... -> lca -> ... -> v -> u.
    std::vector<Vertex> left{e.u}, right{e.v};
    while (left.back() != right.back()) {
      if (depth[left.back()] >= depth[right.back()])
        left.push_back(parent[left.back()]);
      else
        right.push_back(parent[right.back()]);
    }
    std::vector<Vertex> walk = left;
    for (auto it = right.rbegin() + 1; it != right.rend(); ++it) walk.push_back(*it);
    walk.push_back(e.u);

    IntegerVector chain(m, Integer(0));
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      std::size_t idx = g.edge_index_checked(walk[i], walk[i + 1]);
      chain[idx] += walk[i] < walk[i + 1] ? 1 : -1;
    }
    if (!boundaries.contains(chain)) return walk;
  }
  return {};
}

struct CollapseState {
  std::vector<Simplex> simplices;
  std::vector<std::vector<std::size_t>> facets, cofacets;
};

CollapseState collapse_state(const FlagComplex& fc) {
  CollapseState st;
  std::vector<std::size_t> offset;
  for (std::size_t k = 0; k < fc.level_count(); ++k) {
    offset.push_back(st.simplices.size());
    for (const auto& s : fc.level(k)) st.simplices.push_back(s);
  }
  st.facets.resize(st.simplices.size());
  st.cofacets.resize(st.simplices.size());
  for (std::size_t i = 0; i < st.simplices.size(); ++i) {
    const Simplex& s = st.simplices[i];
    if (s.size() < 2) continue;
    for (std::size_t omit = 0; omit < s.size(); ++omit) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(omit));
      std::size_t j = offset[face.size() - 1] + *fc.find(face);
      st.facets[i].push_back(j);
      st.cofacets[j].push_back(i);
    }
  }
  return st;
}

bool try_collapse(const CollapseState& st, std::mt19937_64* rng, std::vector<CollapseStep>& steps, Vertex& survivor) {
  const std::size_t n = st.simplices.size();
  std::vector<char> alive(n, 1);
  std::vector<std::size_t> live_cofaces(n);
  std::set<std::size_t> free;
  for (std::size_t i = 0; i < n; ++i) {
    live_cofaces[i] = st.cofacets[i].size();
    if (live_cofaces[i] == 1) free.insert(i);
  }
  std::size_t remaining = n;
  steps.clear();
  while (!free.empty()) {
    auto it = free.begin();
    if (rng) std::advance(it, std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(*rng));
    std::size_t face = *it;
    free.erase(it);
    if (!alive[face] || live_cofaces[face] != 1) continue;
    std::size_t coface = n;
    for (std::size_t c : st.cofacets[face])
      if (alive[c]) coface = c;
    alive[face] = alive[coface] = 0;
    remaining -= 2;
    steps.push_back({st.simplices[face], st.simplices[coface]});
    for (std::size_t f : st.facets[coface]) {
      if (f == face) continue;
      if (--live_cofaces[f] == 1 && alive[f]) free.insert(f);
    }
    for (std::size_t f : st.facets[face])
      if (--live_cofaces[f] == 1 && alive[f]) free.insert(f);
    free.erase(coface);
  }
  if (remaining != 1) return false;
  for (std::size_t i = 0; i < n; ++i)
    if (alive[i]) survivor = st.simplices[i].front();
  return true;
}

}  // namespace

SimpleConnectivityStatus simple_connectivity(const FlagComplex& fc, const CollapseOptions& options) {
  const SimplicialGraph& g = fc.base();
  if (g.vertex_count() == 0 || !is_connected(g)) throw PreconditionError("simple_connectivity requires a connected, nonempty graph");
  if (fc.level_count() < 3 && fc.truncated())
    throw PreconditionError("simple_connectivity needs at least the 2-skeleton");

  SimpleConnectivityStatus out;
  out.seed = options.seed;
  out.h1 = homology_h1(fc);
  if (!out.h1.trivial()) {
    out.verdict = Connectivity::kNotSimplyConnected;
    out.cycle = nontrivial_cycle(fc);
    require(!out.cycle.empty(), "H1 is nonzero but every fundamental cycle bounds");
    return out;
  }

  CollapseState st = collapse_state(fc);
  for (std::size_t attempt = 0; attempt <= options.restarts; ++attempt) {
    out.attempts = attempt + 1;
    std::vector<CollapseStep> steps;
    Vertex survivor = 0;
    bool ok;
    if (attempt == 0) {
      ok = try_collapse(st, nullptr, steps, survivor);
    } else {
      std::seed_seq seq{options.seed, static_cast<std::uint64_t>(attempt)};
      std::mt19937_64 rng(seq);
      ok = try_collapse(st, &rng, steps, survivor);
    }
    if (ok) {
      out.verdict = Connectivity::kSimplyConnected;
      out.collapse = std::move(steps);
      out.survivor = survivor;
      return out;
    }
  }
  out.verdict = Connectivity::kUnknown;
  return out;
}

const char* to_string(Connectivity c) {
  switch (c) {
    case Connectivity::kSimplyConnected:
      return "SIMPLY_CONNECTED";
    case Connectivity::kNotSimplyConnected:
      return "NOT_SIMPLY_CONNECTED";
    case Connectivity::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

}  // namespace bbg

namespace bbg {

std::vector<Simplex> crowned_triangles(const FlagComplex& fc) {
  if (fc.dimension() < 2)
    throw PreconditionError("crowned_triangles requires dimension at least 2, got " + std::to_string(fc.dimension()));
  const SimplicialGraph& g = fc.base();
  std::vector<Simplex> out;
  for (const Simplex& t : fc.triangles()) {
    bool crowned = fc.triangles_on_edge(g.edge_index_checked(t[0], t[1])).size() >= 2 &&
                   fc.triangles_on_edge(g.edge_index_checked(t[0], t[2])).size() >= 2 &&
                   fc.triangles_on_edge(g.edge_index_checked(t[1], t[2])).size() >= 2;
    if (crowned) out.push_back(t);
  }
  return out;
}

}  // namespace bbg
