#pragma once

#include <cstdint>
#include <random>

#include "bbgkit/bns.hpp"
#include "bbgkit/graph.hpp"
#include "bbgkit/spanner.hpp"

namespace bbg::suite {

using Rng = std::mt19937_64;

// Erdos-Renyi graph with edge probability p, conditioned on connectivity by
// adding a random spanning path first. Vertex ids are "0".."n-1" zero-padded.
SimplicialGraph random_connected_graph(int n, double p, Rng& rng);

enum class CrownPolicy { kAvoid, kForce };

// Starts from a triangle and repeatedly cones a new vertex over an existing
// edge. kAvoid rejects attachments that would create a crowned triangle;
// kForce first surrounds the initial triangle so that it is crowned.
SimplicialGraph random_2tree(int n, CrownPolicy policy, Rng& rng);

SpanningTree random_spanning_tree(const SimplicialGraph& g, Rng& rng);

// Small rationals with frequent zeros and repeated values, so that dead
// edges and vanishing separators occur often. Never the zero character.
BbgCharacter random_character(const SpanningTree& t, Rng& rng);

}  // namespace bbg::suite
