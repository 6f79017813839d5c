#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gk/core.hpp"
#include "gk/decomposition.hpp"
#include "gk/report.hpp"

namespace gk {

/// Unique x-y path of a forest. Throws NotATree on a cycle, NoPath when x
/// and y lie in different components.
SolveReport solve_path_tree(const Instance& inst);

/// Colour-coding table for one colouring: entry (S, v) holds the frontier of
/// x-to-v paths using exactly one vertex of every colour in S.
class ColorTable {
 public:
  ColorTable(int k, int n) : k_(k), n_(n), entries_((std::size_t{1} << k) * n) {}

  int palette() const { return k_; }
  const ParetoSet& at(std::uint32_t colors, Vertex v) const { return entries_[index(colors, v)]; }
  ParetoSet& at(std::uint32_t colors, Vertex v) { return entries_[index(colors, v)]; }

 private:
  std::size_t index(std::uint32_t colors, Vertex v) const { return static_cast<std::size_t>(colors) * n_ + v; }

  int k_;
  int n_;
  std::vector<ParetoSet> entries_;
};

/// Fills the table for a fixed colouring (colours in [0, k)).
ColorTable build_color_table(const Instance& inst, int k, const std::vector<int>& coloring);

/// ceil(3 e^k): repetitions giving at least 95% success for a k-vertex path.
int default_trials(int k);

/// Randomized colour coding for x-y paths with exactly k vertices. A
/// feasible answer always carries a verified witness; an infeasible one
/// means no colourful path met the budget (and target) in any trial. When
/// the instance has a target, trials stop at the first success.
SolveReport solve_path_color_coding(const Instance& inst, int k, int trials, std::uint64_t seed);

/// Runs colour coding for k = 1..n and merges the frontiers. With a target
/// the sweep stops at the first k that succeeds. `trials` overrides the
/// per-k default.
SolveReport solve_path_color_coding_sweep(const Instance& inst, std::optional<int> trials, std::uint64_t seed);

/// Exact treewidth DP over x-y paths. `nd` must be pinned at {x, y}.
SolveReport solve_path_treewidth(const Instance& inst, const NiceDecomposition& nd);

/// Same, building a min-fill decomposition pinned at the terminals.
SolveReport solve_path_treewidth(const Instance& inst, std::uint64_t decomposition_seed = 0);

}  // namespace gk
