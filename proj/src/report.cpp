#include "gk/report.hpp"

namespace gk {
namespace {

struct Candidate {
  Weight w;
  Value a;
  std::size_t index;
};

}  // namespace

WitnessedFrontier merge_witnessed(std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates,
                                  Weight cap) {
  std::vector<Candidate> keyed;
  keyed.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    keyed.push_back({candidates[i].first.w, candidates[i].first.a, i});
  keep_undominated(keyed, cap);

  WitnessedFrontier out;
  std::vector<ParetoPair> pairs;
  for (const Candidate& c : keyed) {
    pairs.push_back({c.w, c.a});
    out.witnesses.push_back(std::move(candidates[c.index].second));
  }
  out.frontier = ParetoSet::from_pairs(std::move(pairs), cap);
  return out;
}

SolveReport make_report(const Instance& inst, WitnessedFrontier wf) {
  SolveReport report;
  report.frontier = std::move(wf.frontier);
  if (auto best = report.frontier.best()) {
    report.best_value = best->a;
    report.feasible = !inst.d || best->a >= *inst.d;
    if (report.feasible) report.witness = std::move(wf.witnesses.back());
  }
  return report;
}

}  // namespace gk
