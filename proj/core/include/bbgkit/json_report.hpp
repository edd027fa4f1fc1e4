#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "bbgkit/bns.hpp"
#include "bbgkit/flag_complex.hpp"
#include "bbgkit/presentation.hpp"
#include "bbgkit/recognition.hpp"
#include "bbgkit/spanner.hpp"

namespace bbg {

// Rationals are always strings ("p/q" or "p"), never JSON numbers.

nlohmann::json tree_to_json(const SpanningTree& t);
nlohmann::json character_to_json(const BbgCharacter& chi);
// {"tree": [["5","2"], ...], "values": ["1", "-2/3", ...]}
BbgCharacter character_from_json(const SimplicialGraph& g, const nlohmann::json& doc);

nlohmann::json arrangement_to_json(const SpanningTree& t, const std::vector<MissingSubsphere>& arrangement);
nlohmann::json connectivity_to_json(const SimplicialGraph& g, const SimpleConnectivityStatus& s);
nlohmann::json dual_to_json(const DualGraph& d);
nlohmann::json witness_to_json(const RedundantTriangleWitness& w);
nlohmann::json verdict_to_json(const RecognitionVerdict& v);
nlohmann::json presentation_to_json(const GroupPresentation& p, const SimplicialGraph& g);

}  // namespace bbg
