#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gk/core.hpp"
#include "gk/decomposition.hpp"
#include "gk/oracles.hpp"
#include "gk/reductions.hpp"
#include "gk/report.hpp"

namespace gk {

using Json = nlohmann::ordered_json;

/// Instance schema version 1. Unknown fields are rejected; an edge is
/// [u, v] or [u, v, cost]. Result is validated.
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

/// Wall time is emitted only when `timing` is set, keeping output
/// reproducible by default.
Json report_to_json(const SolveReport& report, bool timing = false);

Json decomposition_to_json(const NiceDecomposition& nd);
Json tree_decomposition_to_json(const TreeDecomposition& td);

/// {"n": int, "edges": [[u, v], ...]}
SimpleGraph graph_from_json(const Json& j);
Json graph_to_json(const SimpleGraph& g);

/// {"sizes": [...], "profits": [...], "capacity": int, "target": int}
KnapsackItems items_from_json(const Json& j);
Json items_to_json(const KnapsackItems& items);

Json provenance_to_json(const ReductionOutput& out);

/// A plain list of vertex ids.
std::vector<Vertex> witness_from_json(const Json& j);

/// Reads and parses a JSON file; throws ParseError.
Json read_json_file(const std::string& path);

}  // namespace gk
