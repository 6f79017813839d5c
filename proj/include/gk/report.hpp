#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gk/core.hpp"
#include "gk/pareto.hpp"

namespace gk {

struct SolveStats {
  std::int64_t nodes_expanded = 0;
  std::int64_t states_touched = 0;
  double wall_time_ms = 0.0;
  bool unreachable = false;
};

struct SolveReport {
  bool feasible = false;
  std::optional<Value> best_value;
  std::optional<std::vector<Vertex>> witness;
  ParetoSet frontier;
  SolveStats stats;
  /// Set by the approximation wrapper: value of the witness under the
  /// scaled values.
  std::optional<Value> scaled_value;
};

/// A frontier whose i-th pair is realized by witnesses[i].
struct WitnessedFrontier {
  ParetoSet frontier;
  std::vector<std::vector<Vertex>> witnesses;
};

/// Keeps the undominated entries of a list of (pair, witness) candidates.
WitnessedFrontier merge_witnessed(std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates,
                                  Weight cap);

/// Derives feasibility, best value and witness from a frontier. With a
/// target `d` the answer is the decision "some pair has a >= d"; without
/// one it is "some solution fits".
SolveReport make_report(const Instance& inst, WitnessedFrontier wf);

}  // namespace gk
