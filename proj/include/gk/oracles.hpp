#pragma once

#include <vector>

#include "gk/core.hpp"
#include "gk/pareto.hpp"
#include "gk/report.hpp"

namespace gk {

constexpr int kConnectedOracleLimit = 20;
constexpr int kPathOracleLimit = 12;

/// Frontier over all connected vertex subsets (and the empty set). n <= 20.
ParetoSet enumerate_connected_subsets_opt(const Instance& inst);

/// Every simple x-y path, as vertex sequences starting at x. n <= 12.
std::vector<std::vector<Vertex>> enumerate_xy_paths(const Instance& inst);

/// Frontier over all simple x-y paths. n <= 12.
ParetoSet enumerate_paths_opt(const Instance& inst);

/// Frontier over the minimum-cost simple x-y paths. n <= 12. Throws
/// Unreachable when y cannot be reached from x.
ParetoSet enumerate_shortest_paths_opt(const Instance& inst);

/// Brute-force report for any variant; an unreachable y is reported as
/// infeasible.
SolveReport oracle_solve(const Instance& inst);

// Brute-force deciders for the source problems of the reductions.

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

struct KnapsackItems {
  std::vector<Weight> size;   // theta
  std::vector<Value> profit;  // p
  Weight capacity = 0;        // b
  Value target = 0;           // q
};

bool has_vertex_cover(const SimpleGraph& g, int k);
bool has_partial_vertex_cover(const SimpleGraph& g, int k, int covered);
bool has_hamiltonian_path(const SimpleGraph& g, Vertex x, Vertex y);
bool knapsack_reaches(const KnapsackItems& items);

}  // namespace gk
