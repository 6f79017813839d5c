#pragma once

#include <functional>
#include <vector>

#include "gk/core.hpp"
#include "gk/decomposition.hpp"

namespace gk::test {

inline Instance make_instance(Variant variant, int n, std::vector<std::pair<Vertex, Vertex>> edges,
                              std::vector<Weight> w, std::vector<Value> a, Weight s,
                              std::optional<Value> d = std::nullopt, std::optional<Vertex> x = std::nullopt,
                              std::optional<Vertex> y = std::nullopt) {
  Instance inst;
  inst.variant = variant;
  inst.n = n;
  for (auto [u, v] : edges) inst.edges.push_back({u, v, 1});
  inst.weight = std::move(w);
  inst.value = std::move(a);
  inst.s = s;
  inst.d = d;
  inst.x = x;
  inst.y = y;
  return validate_instance(inst);
}

/// Rebuilds a decomposition from an edited node list: ids are renumbered in
/// post-order from `root` and depths recomputed. Nodes not reachable from
/// `root` are discarded.
inline NiceDecomposition renumber(const std::vector<NiceNode>& nodes, int root, const std::vector<Vertex>& pinned,
                                  int width) {
  NiceDecomposition out;
  out.pinned = pinned;
  out.width = width;
  std::function<int(int, int)> visit = [&](int t, int depth) {
    NiceNode node = nodes[t];
    std::vector<int> kids;
    for (int c : nodes[t].children) kids.push_back(visit(c, depth + 1));
    node.children = kids;
    node.depth = depth;
    out.nodes.push_back(node);
    return static_cast<int>(out.nodes.size()) - 1;
  };
  out.root = visit(root, 0);
  return out;
}

/// Removes introduce-edge node `t` by linking its child to its parent.
inline NiceDecomposition drop_node(const NiceDecomposition& nd, int t) {
  std::vector<NiceNode> nodes = nd.nodes;
  const int child = nodes[t].children[0];
  int root = nd.root;
  for (NiceNode& node : nodes)
    for (int& c : node.children)
      if (c == t) c = child;
  if (root == t) root = child;
  return renumber(nodes, root, nd.pinned, nd.width);
}

/// Inserts a copy of introduce-edge node `t` directly above it.
inline NiceDecomposition duplicate_node(const NiceDecomposition& nd, int t) {
  std::vector<NiceNode> nodes = nd.nodes;
  NiceNode copy = nodes[t];
  copy.children = {t};
  nodes.push_back(copy);
  const int added = static_cast<int>(nodes.size()) - 1;
  int root = nd.root;
  for (int i = 0; i < added; ++i)
    for (int& c : nodes[i].children)
      if (c == t) c = added;
  if (root == t) root = added;
  return renumber(nodes, root, nd.pinned, nd.width);
}

}  // namespace gk::test
