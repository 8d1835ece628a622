#pragma once

#include "votedim/certificates.hpp"
#include "votedim/cover.hpp"
#include "votedim/game.hpp"
#include "votedim/separation.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace votedim::json_io {

using Json = nlohmann::ordered_json;

// Sorted index array.
Json to_json(const Coalition& c);
Json to_json(const NodeSet& s);
Coalition coalition_from_json(const Json& j, int n);
NodeSet node_set_from_json(const Json& j, int t);

// {"n": 4, "kind": "weighted", "weights": ["1", "1/2", ...], "quota": "0.65"}
// {"n": 4, "kind": "explicit", "winning": [[1, 2], ...]}
// {"n": 4, "kind": "intersection" | "union", "games": [...]}
// Rationals are strings (decimal or p/q) or integers.
SimpleGameExpr game_from_json(const Json& j);
Json to_json(const SimpleGameExpr& g);

// {"losing": [[...], ...], "winning": [[...], ...]}
BalanceCertificate certificate_from_json(const Json& j, int n);
Json to_json(const BalanceCertificate& cert);

// {"nodes": t, "edges": [[...], ...]}
Hypergraph hypergraph_from_json(const Json& j);
Json to_json(const Hypergraph& h);

// {"n": 4, "winning_constraints": [[...]], "losing_targets": [[...]]}
SeparationInstance instance_from_json(const Json& j);
Json to_json(const SeparationInstance& instance);
Json to_json(const SeparationResult& result);

// {"weights": ["1/2", ...], "bound": 7, "excluded_part": [1, 3, 6]}
DualWeightCertificate dual_from_json(const Json& j, int t);
Json to_json(const DualWeightCertificate& d);

Json to_json(const CoverSolution& cover);

// Reads and parses a whole file; ParseError on failure.
Json read_file(const std::string& path);

}  // namespace votedim::json_io
