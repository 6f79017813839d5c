#pragma once

#include <string>
#include <vector>

#include "gk/core.hpp"

namespace gk {

struct Verification {
  Weight w = 0;
  Value a = 0;
  bool ok = false;
  std::string reason;
};

/// Checks a candidate solution against the instance.
///
/// For the path variants the vertices are first tried in the given order
/// (either direction). If that order is not an x-y path, a minimum-cost
/// Hamiltonian x-y path of the induced subgraph is searched for (witnesses
/// of at most 16 vertices). For the shortest-path variant the path cost must
/// equal the distance from x to y given by plain Dijkstra.
///
/// When the instance has a target `d`, value >= d is also required.
Verification verify_solution(const Instance& inst, const std::vector<Vertex>& solution);

}  // namespace gk
