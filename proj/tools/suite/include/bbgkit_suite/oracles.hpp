#pragma once

#include <vector>

#include "bbgkit/graph.hpp"
#include "bbgkit/spanner.hpp"

// Deliberately naive reference implementations. They share no code with the
// library beyond the graph container.
namespace bbg::suite {

// Inclusion-minimal separating vertex sets by enumerating every subset and
// every proper subset of it. Sorted by size then lexicographically.
std::vector<VertexSet> brute_force_minimal_separators(const SimplicialGraph& g);

// d_T(x, y) <= 2 d_G(x, y) for every pair, by breadth-first search from every
// vertex in both graphs.
bool all_pairs_spanner_check(const SimplicialGraph& g, const SpanningTree& t);

// Number of tree 2-spanners by checking every (|V|-1)-edge subset.
std::size_t brute_force_spanner_count(const SimplicialGraph& g);

}  // namespace bbg::suite
