#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "gk/core.hpp"

namespace gk {

/// Bags indexed by tree node, parent = -1 for roots. A forest is accepted;
/// each vertex must live in a single connected piece of it.
struct TreeDecomposition {
  std::vector<std::vector<Vertex>> bags;
  std::vector<int> parent;

  int width() const;
};

enum class NodeKind { Leaf, IntroduceVertex, IntroduceEdge, ForgetVertex, Join };

std::string_view to_string(NodeKind kind);

struct NiceNode {
  NodeKind kind = NodeKind::Leaf;
  std::vector<Vertex> bag;  // sorted
  std::vector<int> children;
  Vertex vertex = -1;  // IntroduceVertex / ForgetVertex
  Edge edge{};         // IntroduceEdge, with edge.u < edge.v
  int depth = 0;       // distance to the root
};

/// Rooted nice edge tree decomposition. Node ids are in post-order, so every
/// child id is smaller than its parent id and the root is the last node.
struct NiceDecomposition {
  std::vector<NiceNode> nodes;
  int root = -1;
  std::vector<Vertex> pinned;  // sorted; contained in every bag
  int width = -1;

  /// Node ids by decreasing depth (ties by id), a valid bottom-up order.
  std::vector<int> bottom_up_order() const;
};

/// Greedy min-fill elimination order. Ties go to the lowest vertex id when
/// `seed` is 0; any other seed replaces the id by a seeded random rank.
std::vector<Vertex> elimination_order_minfill(const Instance& inst, std::uint64_t seed = 0);

/// One bag per vertex: the vertex plus its later neighbours in the filled
/// graph; the parent is the earliest-eliminated of those neighbours.
TreeDecomposition tree_decomposition_from_order(const Instance& inst, const std::vector<Vertex>& order);

/// Converts a tree decomposition into nice form with `pinned` added to every
/// bag. Root and leaf bags equal the pinned set. Each edge is introduced at
/// the topmost node whose bag holds both endpoints.
NiceDecomposition make_nice(const Instance& inst, const TreeDecomposition& td,
                            std::vector<Vertex> pinned);

NiceDecomposition build_nice_decomposition(const Instance& inst, const std::vector<Vertex>& order,
                                           std::vector<Vertex> pinned);

/// Throws gk::Error when a tree decomposition property fails.
void validate_tree_decomposition(const Instance& inst, const TreeDecomposition& td);

/// Throws gk::Error (EdgeNeverIntroduced, EdgeIntroducedTwice,
/// BrokenSubtreeConnectivity, BadNodeArity, RootNotPinnedBag,
/// BadBagTransition) when the decomposition is not a valid nice edge tree
/// decomposition of `inst`.
void validate_nice_decomposition(const Instance& inst, const NiceDecomposition& nd);

}  // namespace gk
