#include "gk/verify.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace gk {
namespace {

constexpr std::size_t kMaxHamiltonianSearch = 16;

bool induces_connected(const Graph& g, const std::vector<Vertex>& set, int n) {
  if (set.empty()) return true;
  std::vector<char> member(n, 0), seen(n, 0);
  for (Vertex v : set) member[v] = 1;
  std::vector<Vertex> stack{set.front()};
  seen[set.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : g.neighbors(v))
      if (member[nb.to] && !seen[nb.to]) {
        seen[nb.to] = 1;
        ++reached;
        stack.push_back(nb.to);
      }
  }
  return reached == set.size();
}

// Cost of walking `order` from front to back, or nullopt if two consecutive
// vertices are not adjacent.
std::optional<Cost> walk_cost(const Graph& g, const std::vector<Vertex>& order) {
  Cost total = 0;
  for (std::size_t i = 1; i < order.size(); ++i) {
    auto c = g.edge_cost(order[i - 1], order[i]);
    if (!c) return std::nullopt;
    total += *c;
  }
  return total;
}

// Minimum cost of a Hamiltonian x-y path of the subgraph induced by `set`.
std::optional<Cost> cheapest_hamiltonian(const Graph& g, const std::vector<Vertex>& set, Vertex x,
                                         Vertex y) {
  const std::size_t k = set.size();
  std::size_t ix = k, iy = k;
  for (std::size_t i = 0; i < k; ++i) {
    if (set[i] == x) ix = i;
    if (set[i] == y) iy = i;
  }
  constexpr Cost kInf = std::numeric_limits<Cost>::max();
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<Cost> best((full + 1) * k, kInf);
  best[(std::size_t{1} << ix) * k + ix] = 0;
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (!(mask >> ix & 1)) continue;
    for (std::size_t last = 0; last < k; ++last) {
      Cost cur = best[mask * k + last];
      if (cur == kInf) continue;
      for (std::size_t next = 0; next < k; ++next) {
        if (mask >> next & 1) continue;
        auto c = g.edge_cost(set[last], set[next]);
        if (!c) continue;
        Cost& slot = best[(mask | (std::size_t{1} << next)) * k + next];
        slot = std::min(slot, cur + *c);
      }
    }
  }
  Cost result = best[full * k + iy];
  if (result == kInf) return std::nullopt;
  return result;
}

}  // namespace

Verification verify_solution(const Instance& inst, const std::vector<Vertex>& solution) {
  Verification out;
  std::vector<char> member(inst.n, 0);
  for (Vertex v : solution) {
    if (v < 0 || v >= inst.n) {
      out.reason = "unknown vertex " + std::to_string(v);
      return out;
    }
    if (member[v]) {
      out.reason = "duplicate vertex " + std::to_string(v);
      return out;
    }
    member[v] = 1;
  }
  out.w = inst.total_weight(solution);
  out.a = inst.total_value(solution);

  const Graph g(inst);
  if (inst.variant == Variant::Connected) {
    if (!induces_connected(g, solution, inst.n)) {
      out.reason = "disconnected";
      return out;
    }
  } else {
    const Vertex x = *inst.x, y = *inst.y;
    if (!member[x] || !member[y]) {
      out.reason = "missing terminal";
      return out;
    }
    std::optional<Cost> cost;
    if (!solution.empty()) {
      std::vector<Vertex> order = solution;
      if (order.front() != x) std::reverse(order.begin(), order.end());
      if (order.front() == x && order.back() == y) cost = walk_cost(g, order);
    }
    std::optional<Cost> shortest;
    if (inst.variant == Variant::ShortestPath) shortest = shortest_distances(g, x)[y];
    const bool order_good = cost && (!shortest || *cost == *shortest);
    if (!order_good) {
      if (solution.size() <= kMaxHamiltonianSearch) {
        auto ham = cheapest_hamiltonian(g, solution, x, y);
        if (ham) cost = ham;
        else cost.reset();
      }
    }
    if (!cost) {
      out.reason = "not an x-y path";
      return out;
    }
    if (shortest && *cost != *shortest) {
      out.reason = "not a shortest path";
      return out;
    }
  }

  if (out.w > inst.s) {
    out.reason = "over budget";
    return out;
  }
  if (inst.d && out.a < *inst.d) {
    out.reason = "below target";
    return out;
  }
  out.ok = true;
  out.reason = "ok";
  return out;
}

}  // namespace gk
