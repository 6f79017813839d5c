#include "gk/core.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace gk {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Connected: return "connected";
    case Variant::Path: return "path";
    case Variant::ShortestPath: return "shortest_path";
  }
  return "?";
}

Variant variant_from_string(std::string_view s) {
  if (s == "connected") return Variant::Connected;
  if (s == "path") return Variant::Path;
  if (s == "shortest_path") return Variant::ShortestPath;
  throw Error(ErrorCode::BadField, "unknown variant '" + std::string(s) + "'");
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::ZeroEdgeCost: return "ZeroEdgeCost";
    case ErrorCode::MissingTerminal: return "MissingTerminal";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::NegativeCombined: return "NegativeCombined";
    case ErrorCode::PinnedTooLarge: return "PinnedTooLarge";
    case ErrorCode::EdgeNeverIntroduced: return "EdgeNeverIntroduced";
    case ErrorCode::EdgeIntroducedTwice: return "EdgeIntroducedTwice";
    case ErrorCode::BrokenSubtreeConnectivity: return "BrokenSubtreeConnectivity";
    case ErrorCode::BadNodeArity: return "BadNodeArity";
    case ErrorCode::RootNotPinnedBag: return "RootNotPinnedBag";
    case ErrorCode::BadBagTransition: return "BadBagTransition";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::NoPath: return "NoPath";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::VariantMismatch: return "VariantMismatch";
    case ErrorCode::BadArgument: return "BadArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "?";
}

Weight Instance::total_weight(const std::vector<Vertex>& set) const {
  Weight total = 0;
  for (Vertex v : set) total += weight[v];
  return total;
}

Value Instance::total_value(const std::vector<Vertex>& set) const {
  Value total = 0;
  for (Vertex v : set) total += value[v];
  return total;
}

Value Instance::value_sum() const { return std::accumulate(value.begin(), value.end(), Value{0}); }

Instance validate_instance(Instance raw) {
  if (raw.n < 0) throw Error(ErrorCode::BadField, "negative vertex count");
  if (static_cast<int>(raw.weight.size()) != raw.n || static_cast<int>(raw.value.size()) != raw.n)
    throw Error(ErrorCode::BadField, "weights/values must have exactly n entries");
  for (int v = 0; v < raw.n; ++v) {
    if (raw.weight[v] < 0) throw Error(ErrorCode::BadField, "negative weight at vertex " + std::to_string(v));
    if (raw.value[v] < 0) throw Error(ErrorCode::BadField, "negative value at vertex " + std::to_string(v));
  }
  if (raw.s < 0) throw Error(ErrorCode::BadField, "negative knapsack size");
  if (raw.d && *raw.d < 0) throw Error(ErrorCode::BadField, "negative target value");

  auto in_range = [&](Vertex v) { return v >= 0 && v < raw.n; };
  std::set<std::pair<Vertex, Vertex>> seen;
  for (Edge& e : raw.edges) {
    if (!in_range(e.u) || !in_range(e.v))
      throw Error(ErrorCode::IdOutOfRange,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (e.u > e.v) std::swap(e.u, e.v);
    if (!seen.emplace(e.u, e.v).second)
      throw Error(ErrorCode::DuplicateEdge, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (raw.variant == Variant::ShortestPath) {
      if (e.cost <= 0)
        throw Error(ErrorCode::ZeroEdgeCost,
                    "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} has cost " +
                        std::to_string(e.cost));
    } else {
      e.cost = 1;
    }
  }
  std::sort(raw.edges.begin(), raw.edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });

  if (raw.variant == Variant::Connected) {
    raw.x.reset();
    raw.y.reset();
  } else {
    if (!raw.x || !raw.y) throw Error(ErrorCode::MissingTerminal, "path variants need both x and y");
    if (!in_range(*raw.x) || !in_range(*raw.y)) throw Error(ErrorCode::IdOutOfRange, "terminal out of range");
  }
  return raw;
}

Graph::Graph(const Instance& inst) : Graph(inst.n, inst.edges) {}

Graph::Graph(int n, const std::vector<Edge>& edges) : adj_(n) {
  for (const Edge& e : edges) {
    adj_[e.u].push_back({e.v, e.cost});
    adj_[e.v].push_back({e.u, e.cost});
  }
  for (auto& list : adj_)
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.to < b.to; });
}

bool Graph::adjacent(Vertex a, Vertex b) const { return edge_cost(a, b).has_value(); }

std::optional<Cost> Graph::edge_cost(Vertex a, Vertex b) const {
  const auto& list = adj_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Neighbor& nb, Vertex key) { return nb.to < key; });
  if (it != list.end() && it->to == b) return it->cost;
  return std::nullopt;
}

bool Graph::is_forest() const {
  std::vector<int> parent(adj_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int u = 0; u < size(); ++u)
    for (const Neighbor& nb : adj_[u]) {
      if (nb.to < u) continue;
      int a = find(u), b = find(nb.to);
      if (a == b) return false;
      parent[a] = b;
    }
  return true;
}

std::vector<std::optional<Cost>> shortest_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<Cost>> dist(g.size());
  using Item = std::pair<Cost, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.push({0, source});
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != *dist[v]) continue;
    for (const Neighbor& nb : g.neighbors(v)) {
      Cost cand = d + nb.cost;
      if (!dist[nb.to] || cand < *dist[nb.to]) {
        dist[nb.to] = cand;
        heap.push({cand, nb.to});
      }
    }
  }
  return dist;
}

}  // namespace gk
