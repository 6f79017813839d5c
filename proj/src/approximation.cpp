#include "gk/approximation.hpp"

#include <algorithm>
#include <charconv>

namespace gk {
namespace {

std::int64_t parse_int(const std::string& text) {
  std::int64_t v = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) throw Error(ErrorCode::BadEpsilon, "bad epsilon '" + text + "'");
  return v;
}

void add_stats(SolveStats& into, const SolveStats& from) {
  into.nodes_expanded += from.nodes_expanded;
  into.states_touched += from.states_touched;
  into.wall_time_ms += from.wall_time_ms;
}

}  // namespace

Epsilon Epsilon::parse(const std::string& text) {
  Epsilon e;
  const auto slash = text.find('/');
  if (slash == std::string::npos) {
    e.num = parse_int(text);
  } else {
    e.num = parse_int(text.substr(0, slash));
    e.den = parse_int(text.substr(slash + 1));
  }
  e.check();
  return e;
}

std::string Epsilon::str() const { return std::to_string(num) + "/" + std::to_string(den); }

void Epsilon::check() const {
  if (num <= 0 || den <= 0 || num > den) throw Error(ErrorCode::BadEpsilon, "epsilon must lie in (0, 1]");
}

ScaledInstance scale_values(const Instance& inst, Epsilon eps, const std::vector<char>& relevant) {
  eps.check();
  ScaledInstance out{inst, inst, eps, 0, false};
  for (Vertex v = 0; v < inst.n; ++v)
    if (relevant[v]) out.alpha_max = std::max(out.alpha_max, inst.value[v]);
  if (out.alpha_max == 0) {
    out.zero_values = true;
    std::fill(out.scaled.value.begin(), out.scaled.value.end(), 0);
    return out;
  }
  const __int128 divisor = static_cast<__int128>(eps.num) * out.alpha_max;
  for (Vertex v = 0; v < inst.n; ++v) {
    const __int128 top = static_cast<__int128>(inst.n) * inst.value[v] * eps.den;
    out.scaled.value[v] = relevant[v] ? static_cast<Value>(top / divisor) : 0;
  }
  return out;
}

ScaledInstance scale_values(const Instance& inst, Epsilon eps) {
  return scale_values(inst, eps, std::vector<char>(inst.n, 1));
}

SolveReport fptas_optimize(const Instance& inst, Epsilon eps, const ExactSolver& exact_solver,
                           ScaledInstance* used) {
  eps.check();
  SolveStats stats;
  Instance work = inst;
  work.d.reset();

  // Vertices that can belong to no feasible solution get value 0.
  std::vector<char> relevant(inst.n, 0);
  for (Vertex v = 0; v < inst.n; ++v) relevant[v] = inst.weight[v] <= inst.s;

  if (inst.variant != Variant::Connected) {
    // Largest t such that some feasible path holds a vertex of value >= t.
    std::vector<Value> levels;
    for (Vertex v = 0; v < inst.n; ++v)
      if (relevant[v]) levels.push_back(inst.value[v]);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    auto reaches = [&](Value t) {
      Instance probe = work;
      for (Vertex v = 0; v < inst.n; ++v) probe.value[v] = inst.value[v] >= t ? 1 : 0;
      const SolveReport r = exact_solver(probe);
      add_stats(stats, r.stats);
      return r.best_value.value_or(0) >= 1;
    };
    if (levels.empty() || !reaches(levels.front())) {
      SolveReport none;
      none.stats = stats;
      return none;
    }
    std::size_t lo = 0, hi = levels.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi + 1) / 2;
      if (reaches(levels[mid])) lo = mid;
      else hi = mid - 1;
    }
    for (Vertex v = 0; v < inst.n; ++v) relevant[v] = relevant[v] && inst.value[v] <= levels[lo];
  }

  const ScaledInstance scaled = scale_values(work, eps, relevant);
  const SolveReport exact = exact_solver(scaled.scaled);
  if (used) *used = scaled;
  add_stats(stats, exact.stats);

  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  if (exact.witness)
    candidates.push_back({{inst.total_weight(*exact.witness), inst.total_value(*exact.witness)}, *exact.witness});
  SolveReport report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  report.scaled_value = exact.best_value;
  report.stats = stats;
  return report;
}

}  // namespace gk
