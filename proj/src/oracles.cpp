#include "gk/oracles.hpp"

#include <bit>
#include <functional>
#include <limits>

namespace gk {
namespace {

void guard(const Instance& inst, int limit) {
  if (inst.n > limit) throw Error(ErrorCode::TooLarge, "oracle limited to n <= " + std::to_string(limit));
}

void require_terminals(const Instance& inst) {
  if (!inst.x || !inst.y) throw Error(ErrorCode::MissingTerminal, "path oracle needs x and y");
}

std::vector<std::pair<ParetoPair, std::vector<Vertex>>> connected_candidates(const Instance& inst) {
  guard(inst, kConnectedOracleLimit);
  std::vector<std::uint32_t> nbr(inst.n, 0);
  for (const Edge& e : inst.edges) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> out{{{0, 0}, {}}};
  for (std::uint32_t set = 1; set < (1u << inst.n); ++set) {
    std::uint32_t reach = set & (~set + 1);
    for (std::uint32_t grown = reach;; reach = grown) {
      for (std::uint32_t rest = reach; rest; rest &= rest - 1) grown |= nbr[std::countr_zero(rest)] & set;
      if (grown == reach) break;
    }
    if (reach != set) continue;
    std::vector<Vertex> members;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) members.push_back(std::countr_zero(rest));
    const Weight w = inst.total_weight(members);
    if (w <= inst.s) out.push_back({{w, inst.total_value(members)}, std::move(members)});
  }
  return out;
}

Cost path_cost(const Graph& g, const std::vector<Vertex>& path) {
  Cost c = 0;
  for (std::size_t i = 1; i < path.size(); ++i) c += *g.edge_cost(path[i - 1], path[i]);
  return c;
}

std::vector<std::pair<ParetoPair, std::vector<Vertex>>> path_candidates(const Instance& inst,
                                                                        const std::vector<std::vector<Vertex>>& paths) {
  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> out;
  for (const auto& p : paths) {
    const Weight w = inst.total_weight(p);
    if (w <= inst.s) out.push_back({{w, inst.total_value(p)}, p});
  }
  return out;
}

std::vector<std::vector<Vertex>> shortest_xy_paths(const Instance& inst) {
  const auto paths = enumerate_xy_paths(inst);
  if (paths.empty()) throw Error(ErrorCode::Unreachable, "y is not reachable from x");
  const Graph g(inst);
  Cost best = std::numeric_limits<Cost>::max();
  for (const auto& p : paths) best = std::min(best, path_cost(g, p));
  std::vector<std::vector<Vertex>> out;
  for (const auto& p : paths)
    if (path_cost(g, p) == best) out.push_back(p);
  return out;
}

ParetoSet frontier_of(std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates, Weight cap) {
  return merge_witnessed(std::move(candidates), cap).frontier;
}

}  // namespace

ParetoSet enumerate_connected_subsets_opt(const Instance& inst) {
  return frontier_of(connected_candidates(inst), inst.s);
}

std::vector<std::vector<Vertex>> enumerate_xy_paths(const Instance& inst) {
  guard(inst, kPathOracleLimit);
  require_terminals(inst);
  const Graph g(inst);
  const Vertex x = *inst.x, y = *inst.y;
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{x};
  std::vector<char> on_path(inst.n, 0);
  on_path[x] = 1;
  std::function<void(Vertex)> dfs = [&](Vertex v) {
    if (v == y) {
      out.push_back(path);
      return;
    }
    for (const Neighbor& nb : g.neighbors(v)) {
      if (on_path[nb.to]) continue;
      on_path[nb.to] = 1;
      path.push_back(nb.to);
      dfs(nb.to);
      path.pop_back();
      on_path[nb.to] = 0;
    }
  };
  dfs(x);
  return out;
}

ParetoSet enumerate_paths_opt(const Instance& inst) {
  return frontier_of(path_candidates(inst, enumerate_xy_paths(inst)), inst.s);
}

ParetoSet enumerate_shortest_paths_opt(const Instance& inst) {
  return frontier_of(path_candidates(inst, shortest_xy_paths(inst)), inst.s);
}

SolveReport oracle_solve(const Instance& inst) {
  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  SolveStats stats;
  switch (inst.variant) {
    case Variant::Connected:
      candidates = connected_candidates(inst);
      break;
    case Variant::Path:
      candidates = path_candidates(inst, enumerate_xy_paths(inst));
      break;
    case Variant::ShortestPath:
      try {
        candidates = path_candidates(inst, shortest_xy_paths(inst));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Unreachable) throw;
        stats.unreachable = true;
      }
      break;
  }
  stats.states_touched = static_cast<std::int64_t>(candidates.size());
  SolveReport report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  report.stats = stats;
  return report;
}

bool has_vertex_cover(const SimpleGraph& g, int k) {
  for (std::uint32_t set = 0; set < (1u << g.n); ++set) {
    if (std::popcount(set) > k) continue;
    bool covers = true;
    for (auto [u, v] : g.edges) covers = covers && (((set >> u) & 1) || ((set >> v) & 1));
    if (covers) return true;
  }
  return false;
}

bool has_partial_vertex_cover(const SimpleGraph& g, int k, int covered) {
  for (std::uint32_t set = 0; set < (1u << g.n); ++set) {
    if (std::popcount(set) > k) continue;
    int hit = 0;
    for (auto [u, v] : g.edges) hit += ((set >> u) & 1) || ((set >> v) & 1);
    if (hit >= covered) return true;
  }
  return false;
}

bool has_hamiltonian_path(const SimpleGraph& g, Vertex x, Vertex y) {
  const int n = g.n;
  std::vector<std::uint32_t> nbr(n, 0);
  for (auto [u, v] : g.edges) {
    nbr[u] |= 1u << v;
    nbr[v] |= 1u << u;
  }
  // reach[set] = endpoints v such that an x-v path covers exactly `set`.
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  reach[1u << x] = 1u << x;
  for (std::uint32_t set = 1; set < (1u << n); ++set)
    for (std::uint32_t ends = reach[set]; ends; ends &= ends - 1) {
      const int v = std::countr_zero(ends);
      for (std::uint32_t next = nbr[v] & ~set; next; next &= next - 1)
        reach[set | (next & (~next + 1))] |= next & (~next + 1);
    }
  return (reach[(1u << n) - 1] >> y) & 1;
}

bool knapsack_reaches(const KnapsackItems& items) {
  const std::size_t m = items.size.size();
  for (std::uint32_t set = 0; set < (1u << m); ++set) {
    Weight w = 0;
    Value p = 0;
    for (std::size_t i = 0; i < m; ++i)
      if ((set >> i) & 1) {
        w += items.size[i];
        p += items.profit[i];
      }
    if (w <= items.capacity && p >= items.target) return true;
  }
  return false;
}

}  // namespace gk
