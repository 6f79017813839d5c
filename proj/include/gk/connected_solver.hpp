#pragma once

#include <cstdint>

#include "gk/core.hpp"
#include "gk/decomposition.hpp"
#include "gk/report.hpp"

namespace gk {

struct ConnectedOptions {
  /// Join only identical child partitions instead of every pair whose
  /// merged connectivity gives the parent partition. Incomplete; kept for
  /// comparison against the oracle.
  bool restricted_join = false;
  std::uint64_t decomposition_seed = 0;
};

struct RootedFrontier {
  WitnessedFrontier result;
  SolveStats stats;
};

/// Undominated (w, a) pairs over connected vertex sets containing `root`
/// with w <= s. `nd` must be pinned at {root}.
RootedFrontier solve_connected_rooted(const Instance& inst, Vertex root, const NiceDecomposition& nd,
                                      const ConnectedOptions& options = {});

/// Union of the rooted frontiers over every vertex, plus the empty set.
SolveReport solve_connected(const Instance& inst, const ConnectedOptions& options = {});

}  // namespace gk
