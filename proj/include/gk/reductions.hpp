#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gk/core.hpp"
#include "gk/decomposition.hpp"
#include "gk/oracles.hpp"

namespace gk {

/// What a gadget vertex stands for in the source problem.
enum class VertexRole { U, G, H, Hub, Center, Leaf, V, W, Vertex };

std::string to_string(VertexRole role);

/// `index` refers to a source vertex, source edge or item, depending on the
/// role (U/G: vertex, H: edge, Leaf/V/W: item, Vertex: same id).
struct RoleEntry {
  VertexRole role = VertexRole::Vertex;
  int index = -1;
};

struct ReductionOutput {
  std::string reduction;
  Instance instance;
  std::vector<RoleEntry> provenance;
  std::optional<SimpleGraph> source_graph;
  std::optional<KnapsackItems> source_items;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  /// Width-2 path decomposition emitted by the ladder gadget.
  std::optional<TreeDecomposition> path_decomposition;
};

/// u_i = i, g_i = n + i, h_e = 2n + e.
ReductionOutput reduce_vertex_cover_to_connected(const SimpleGraph& g, int k);

/// Center 0, item i at leaf i + 1.
ReductionOutput reduce_knapsack_to_star_connected(const KnapsackItems& items);

/// u_i = i, h_e = n + e, hub g = n + m.
ReductionOutput reduce_partial_vc_to_connected(const SimpleGraph& g, int k, int covered);

/// Same graph, w = 0, a = 1, s = 0, d = n.
ReductionOutput reduce_hamiltonian_to_path(const SimpleGraph& g, Vertex x, Vertex y);

/// Ladder with u_i = i (0..n), v_i = n + i, w_i = 2n + i (1..n); x = u_0, y = u_n.
ReductionOutput reduce_knapsack_to_path_gadget(const KnapsackItems& items, Variant variant);

}  // namespace gk
