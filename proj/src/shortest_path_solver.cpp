#include "gk/shortest_path_solver.hpp"

#include <algorithm>
#include <chrono>
#include <queue>

namespace gk {
namespace {

struct PathLabel {
  Weight w = 0;
  Value a = 0;
  Vertex prev = -1;
  int prev_label = -1;
};

std::vector<Vertex> trace(const std::vector<std::vector<PathLabel>>& labels, Vertex v, int l) {
  std::vector<Vertex> path;
  while (v >= 0) {
    path.push_back(v);
    const PathLabel& lab = labels[v][l];
    v = lab.prev;
    l = lab.prev_label;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ParetoSet as_set(const std::vector<PathLabel>& labels, Weight cap) {
  std::vector<ParetoPair> pairs;
  pairs.reserve(labels.size());
  for (const PathLabel& l : labels) pairs.push_back({l.w, l.a});
  return ParetoSet::from_pairs(std::move(pairs), cap);
}

}  // namespace

LabelSearchResult shortest_path_labels(const Instance& inst, const SettleObserver& observer) {
  if (inst.variant != Variant::ShortestPath)
    throw Error(ErrorCode::VariantMismatch, "label search needs a shortest_path instance");
  const auto started = std::chrono::steady_clock::now();
  const Graph g(inst);
  const Vertex x = *inst.x, y = *inst.y;

  LabelSearchResult out;
  out.state.resize(inst.n);
  std::vector<std::vector<PathLabel>> labels(inst.n);
  SolveStats stats;

  using Entry = std::pair<Cost, Vertex>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  out.state[x].distance = 0;
  if (inst.weight[x] <= inst.s) labels[x].push_back({inst.weight[x], inst.value[x], -1, -1});
  heap.push({0, x});

  while (!heap.empty()) {
    const auto [dist, z] = heap.top();
    heap.pop();
    if (out.state[z].settled || dist != *out.state[z].distance) continue;
    out.state[z].settled = true;
    ++stats.nodes_expanded;
    for (const Neighbor& nb : g.neighbors(z)) {
      const Vertex u = nb.to;
      if (out.state[u].settled) continue;
      const Cost nd = dist + nb.cost;
      auto& du = labels[u];
      if (!out.state[u].distance || nd < *out.state[u].distance) {
        out.state[u].distance = nd;
        du.clear();
        heap.push({nd, u});
      } else if (nd > *out.state[u].distance) {
        continue;
      }
      for (std::size_t l = 0; l < labels[z].size(); ++l) {
        const PathLabel& from = labels[z][l];
        if (from.w + inst.weight[u] <= inst.s)
          du.push_back({from.w + inst.weight[u], from.a + inst.value[u], z, static_cast<int>(l)});
      }
      keep_undominated(du, inst.s);
      stats.states_touched += static_cast<std::int64_t>(du.size());
    }
    if (observer) {
      for (Vertex v = 0; v < inst.n; ++v) out.state[v].frontier = as_set(labels[v], inst.s);
      observer(out.state, z);
    }
  }
  for (Vertex v = 0; v < inst.n; ++v) out.state[v].frontier = as_set(labels[v], inst.s);

  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  if (out.state[y].settled) {
    for (std::size_t l = 0; l < labels[y].size(); ++l)
      candidates.push_back({{labels[y][l].w, labels[y][l].a}, trace(labels, y, static_cast<int>(l))});
  } else {
    stats.unreachable = true;
  }
  out.report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  stats.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  out.report.stats = stats;
  return out;
}

SolveReport solve_shortest_path(const Instance& inst) { return shortest_path_labels(inst).report; }

}  // namespace gk
