#include "gk/path_solver.hpp"

#include <chrono>
#include <climits>
#include <cmath>

#include "gk/random.hpp"

namespace gk {
namespace {

constexpr int kMaxPalette = 24;

void require_path_variant(const Instance& inst) {
  if (inst.variant == Variant::Connected)
    throw Error(ErrorCode::VariantMismatch, "path solvers need x and y terminals");
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

struct ColorLabel {
  Weight w = 0;
  Value a = 0;
  Vertex prev = -1;
  int prev_label = -1;
};

// Labels for every (colour set, vertex) cell, indexed colors * n + v.
using ColorLabels = std::vector<std::vector<ColorLabel>>;

ColorLabels fill_color_labels(const Instance& inst, const Graph& g, int k, const std::vector<int>& coloring,
                              std::int64_t& touched) {
  const int n = inst.n;
  const Vertex x = *inst.x;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  ColorLabels cells(static_cast<std::size_t>(full + 1) * n);
  if (inst.weight[x] <= inst.s)
    cells[(std::size_t{1} << coloring[x]) * n + x].push_back({inst.weight[x], inst.value[x], -1, -1});

  for (std::uint32_t colors = 1; colors <= full; ++colors) {
    if ((colors & (colors - 1)) == 0) continue;
    for (Vertex u = 0; u < n; ++u) {
      const std::uint32_t own = std::uint32_t{1} << coloring[u];
      if (!(colors & own)) continue;
      const std::uint32_t rest = colors & ~own;
      auto& cell = cells[static_cast<std::size_t>(colors) * n + u];
      for (const Neighbor& nb : g.neighbors(u)) {
        const auto& from = cells[static_cast<std::size_t>(rest) * n + nb.to];
        for (std::size_t l = 0; l < from.size(); ++l)
          if (from[l].w + inst.weight[u] <= inst.s)
            cell.push_back({from[l].w + inst.weight[u], from[l].a + inst.value[u], nb.to, static_cast<int>(l)});
      }
      keep_undominated(cell, inst.s);
      touched += static_cast<std::int64_t>(cell.size());
    }
  }
  return cells;
}

std::vector<Vertex> trace_colorful_path(const ColorLabels& cells, int n, const std::vector<int>& coloring,
                                        std::uint32_t colors, Vertex v, int label) {
  std::vector<Vertex> path;
  while (v >= 0) {
    path.push_back(v);
    const ColorLabel& lab = cells[static_cast<std::size_t>(colors) * n + v][label];
    colors &= ~(std::uint32_t{1} << coloring[v]);
    label = lab.prev_label;
    v = lab.prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SolveReport solve_path_tree(const Instance& inst) {
  require_path_variant(inst);
  const auto started = std::chrono::steady_clock::now();
  const Graph g(inst);
  if (!g.is_forest()) throw Error(ErrorCode::NotATree, "graph has a cycle");
  const Vertex x = *inst.x, y = *inst.y;

  std::vector<Vertex> parent(inst.n, -1);
  std::vector<char> seen(inst.n, 0);
  std::vector<Vertex> queue{x};
  seen[x] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (const Neighbor& nb : g.neighbors(queue[head]))
      if (!seen[nb.to]) {
        seen[nb.to] = 1;
        parent[nb.to] = queue[head];
        queue.push_back(nb.to);
      }
  if (!seen[y]) throw Error(ErrorCode::NoPath, "x and y are in different components");

  std::vector<Vertex> path;
  for (Vertex v = y; v >= 0; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());

  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  candidates.push_back({{inst.total_weight(path), inst.total_value(path)}, path});
  SolveReport report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  report.stats.nodes_expanded = static_cast<std::int64_t>(queue.size());
  report.stats.states_touched = static_cast<std::int64_t>(path.size());
  report.stats.wall_time_ms = elapsed_ms(started);
  return report;
}

ColorTable build_color_table(const Instance& inst, int k, const std::vector<int>& coloring) {
  require_path_variant(inst);
  if (k < 1 || k > kMaxPalette) throw Error(ErrorCode::BadArgument, "palette size out of range");
  if (static_cast<int>(coloring.size()) != inst.n) throw Error(ErrorCode::BadArgument, "colouring size mismatch");
  for (int c : coloring)
    if (c < 0 || c >= k) throw Error(ErrorCode::BadArgument, "colour out of range");
  std::int64_t touched = 0;
  const ColorLabels cells = fill_color_labels(inst, Graph(inst), k, coloring, touched);
  ColorTable table(k, inst.n);
  for (std::uint32_t colors = 0; colors < (std::uint32_t{1} << k); ++colors)
    for (Vertex v = 0; v < inst.n; ++v) {
      std::vector<ParetoPair> pairs;
      for (const ColorLabel& l : cells[static_cast<std::size_t>(colors) * inst.n + v]) pairs.push_back({l.w, l.a});
      table.at(colors, v) = ParetoSet::from_pairs(std::move(pairs), inst.s);
    }
  return table;
}

int default_trials(int k) {
  const double trials = std::ceil(3.0 * std::exp(static_cast<double>(k)));
  return trials >= static_cast<double>(INT_MAX) ? INT_MAX : static_cast<int>(trials);
}

SolveReport solve_path_color_coding(const Instance& inst, int k, int trials, std::uint64_t seed) {
  require_path_variant(inst);
  if (k < 1) throw Error(ErrorCode::BadArgument, "k must be positive");
  if (trials < 1) throw Error(ErrorCode::BadArgument, "trials must be positive");
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  SolveStats stats;
  if (k <= inst.n) {
    if (k > kMaxPalette) throw Error(ErrorCode::TooLarge, "palette larger than " + std::to_string(kMaxPalette));
    const Graph g(inst);
    const Vertex y = *inst.y;
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
    std::vector<int> coloring(inst.n);
    for (int trial = 0; trial < trials; ++trial) {
      for (int& c : coloring) c = static_cast<int>(rng.uniform(0, k - 1));
      const ColorLabels cells = fill_color_labels(inst, g, k, coloring, stats.states_touched);
      ++stats.nodes_expanded;
      const auto& answer = cells[static_cast<std::size_t>(full) * inst.n + y];
      bool hit = false;
      for (std::size_t l = 0; l < answer.size(); ++l) {
        candidates.push_back({{answer[l].w, answer[l].a},
                              trace_colorful_path(cells, inst.n, coloring, full, y, static_cast<int>(l))});
        hit = hit || !inst.d || answer[l].a >= *inst.d;
      }
      if (hit && inst.d) break;
    }
  }
  SolveReport report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  stats.wall_time_ms = elapsed_ms(started);
  report.stats = stats;
  return report;
}

SolveReport solve_path_color_coding_sweep(const Instance& inst, std::optional<int> trials, std::uint64_t seed) {
  require_path_variant(inst);
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  SolveStats stats;
  for (int k = 1; k <= inst.n; ++k) {
    SolveReport part = solve_path_color_coding(inst, k, trials.value_or(default_trials(k)), seed);
    stats.nodes_expanded += part.stats.nodes_expanded;
    stats.states_touched += part.stats.states_touched;
    if (part.feasible && inst.d) {
      part.stats = stats;
      part.stats.wall_time_ms = elapsed_ms(started);
      return part;
    }
    if (part.witness) candidates.push_back({*part.frontier.best(), *part.witness});
  }
  SolveReport report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  stats.wall_time_ms = elapsed_ms(started);
  report.stats = stats;
  return report;
}

}  // namespace gk
