#include "gk/pareto.hpp"

namespace gk {

ParetoSet ParetoSet::from_pairs(std::vector<ParetoPair> pairs, Weight cap) {
  keep_undominated(pairs, cap);
  ParetoSet out;
  out.pairs_ = std::move(pairs);
  return out;
}

std::optional<ParetoPair> ParetoSet::best() const {
  if (pairs_.empty()) return std::nullopt;
  return pairs_.back();
}

std::optional<ParetoPair> ParetoSet::meets(Value target) const {
  if (pairs_.empty() || pairs_.back().a < target) return std::nullopt;
  return pairs_.back();
}

bool ParetoSet::is_canonical() const {
  for (std::size_t i = 1; i < pairs_.size(); ++i)
    if (pairs_[i].w <= pairs_[i - 1].w || pairs_[i].a <= pairs_[i - 1].a) return false;
  return true;
}

ParetoSet pareto_insert(const ParetoSet& set, ParetoPair pair, Weight cap_s) {
  std::vector<ParetoPair> pairs = set.pairs();
  pairs.push_back(pair);
  return ParetoSet::from_pairs(std::move(pairs), cap_s);
}

ParetoSet pareto_join(const ParetoSet& a, const ParetoSet& b, Weight offset_w, Value offset_a,
                      Weight cap_s) {
  std::vector<ParetoPair> combined;
  combined.reserve(a.size() * b.size());
  for (const ParetoPair& p : a)
    for (const ParetoPair& q : b) {
      ParetoPair sum{p.w + q.w - offset_w, p.a + q.a - offset_a};
      if (sum.w < 0 || sum.a < 0)
        throw Error(ErrorCode::NegativeCombined,
                    "joined pair (" + std::to_string(sum.w) + "," + std::to_string(sum.a) + ")");
      combined.push_back(sum);
    }
  return ParetoSet::from_pairs(std::move(combined), cap_s);
}

ParetoSet pareto_union(const ParetoSet& a, const ParetoSet& b, Weight cap_s) {
  std::vector<ParetoPair> pairs = a.pairs();
  pairs.insert(pairs.end(), b.begin(), b.end());
  return ParetoSet::from_pairs(std::move(pairs), cap_s);
}

}  // namespace gk
