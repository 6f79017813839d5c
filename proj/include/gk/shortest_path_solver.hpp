#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gk/core.hpp"
#include "gk/pareto.hpp"
#include "gk/report.hpp"

namespace gk {

/// Per-vertex label: settled flag, tentative distance from x, and the
/// frontier over the shortest x-v paths found so far.
struct LabelState {
  bool settled = false;
  std::optional<Cost> distance;
  ParetoSet frontier;
};

/// Called after every settle step with the full state and the vertex just settled.
using SettleObserver = std::function<void(const std::vector<LabelState>&, Vertex)>;

struct LabelSearchResult {
  SolveReport report;
  std::vector<LabelState> state;
};

/// Pareto-label Dijkstra from x. The reported frontier is the label set of y.
/// An unreachable y gives an infeasible report with stats.unreachable set.
LabelSearchResult shortest_path_labels(const Instance& inst, const SettleObserver& observer = {});

SolveReport solve_shortest_path(const Instance& inst);

}  // namespace gk
