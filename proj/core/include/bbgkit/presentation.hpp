#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbgkit/flag_complex.hpp"
#include "bbgkit/graph.hpp"
#include "bbgkit/graph_io.hpp"
#include "bbgkit/spanner.hpp"

namespace bbg {

// Letter k > 0 is generator k-1, letter -k its inverse.
using Word = std::vector<int>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse(const Word& w);
Word commutator(const Word& u, const Word& v);  // u v u^-1 v^-1

// Finds u, v with w equal to [u, v] up to cyclic rotation and inversion.
std::optional<std::pair<Word, Word>> as_commutator(const Word& w);

enum class PresentationKind { kDicksLeary, kTreeSimplified, kRaagStandard };

struct Generator {
  std::string name;
  std::optional<OrientedEdge> edge;  // the oriented graph edge it stands for
};

struct GroupPresentation {
  PresentationKind kind = PresentationKind::kDicksLeary;
  std::vector<Generator> generators;
  std::vector<Word> relators;  // freely and cyclically reduced, nonempty
};

struct Abelianization {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

Abelianization abelianization(const GroupPresentation& p);

std::string word_to_string(const GroupPresentation& p, const Word& w);
std::string to_text(const GroupPresentation& p);
const char* to_string(PresentationKind kind);

// Generators are the edges oriented from smaller to larger vertex; each
// triangle a<b<c contributes the oriented cycle relator and its reversal.
// Refuses (HypothesisError) unless `certificate` shows simple connectivity.
GroupPresentation dicks_leary(const FlagComplex& fc, const SimpleConnectivityStatus& certificate);

// Generators are the tree edges in coordinate order; every other edge is
// replaced by the word read along its tree path.
GroupPresentation tree_simplified(const FlagComplex& fc, const SimpleConnectivityStatus& certificate,
                                  const SpanningTree& t);

// Standard presentation of the RAAG on the dual graph; requires a tree
// 2-spanner. Relators are [e_i, e_j], i < j, one per dual edge.
GroupPresentation raag_presentation(const FlagComplex& fc, const SpanningTree& t);

// Standard RAAG presentation of an arbitrary graph: generators are vertices.
GroupPresentation raag_of_graph(const SimplicialGraph& g);

// Contracts the components of the odd-labelled edges. Every edge needs a
// weight (InputError otherwise). Vertex ids become "{a,b,...}".
SimplicialGraph odd_contraction(const SimplicialGraph& g, const EdgeWeights& weights);

}  // namespace bbg
