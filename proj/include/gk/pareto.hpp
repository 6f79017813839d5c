#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include "gk/core.hpp"

namespace gk {

struct ParetoPair {
  Weight w = 0;
  Value a = 0;

  friend auto operator<=>(const ParetoPair&, const ParetoPair&) = default;
};

/// Sorts `entries` and removes every entry weakly dominated by another one,
/// together with entries heavier than `cap`. Works on any type exposing
/// `w` and `a` members so solver labels can carry back-pointers through the
/// cleanup. Among exact duplicates the first inserted entry survives.
///
/// Result is strictly increasing in both `w` and `a`.
template <typename Entry>
void keep_undominated(std::vector<Entry>& entries, Weight cap) {
  std::erase_if(entries, [cap](const Entry& e) { return e.w > cap; });
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    if (l.w != r.w) return l.w < r.w;
    return l.a > r.a;
  });
  std::size_t kept = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (kept > 0 && entries[i].a <= entries[kept - 1].a) continue;
    if (kept != i) entries[kept] = std::move(entries[i]);
    ++kept;
  }
  entries.resize(kept);
}

/// Canonical list of mutually undominated (weight, value) pairs.
class ParetoSet {
 public:
  ParetoSet() = default;

  /// Builds the undominated closure of `pairs` restricted to w <= cap.
  static ParetoSet from_pairs(std::vector<ParetoPair> pairs, Weight cap);

  const std::vector<ParetoPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  /// Pair with the largest value (the last one in canonical order).
  std::optional<ParetoPair> best() const;

  /// Largest-value pair meeting the target, if any.
  std::optional<ParetoPair> meets(Value target) const;

  /// True when strictly increasing in both coordinates.
  bool is_canonical() const;

  friend bool operator==(const ParetoSet&, const ParetoSet&) = default;

 private:
  std::vector<ParetoPair> pairs_;
};

ParetoSet pareto_insert(const ParetoSet& set, ParetoPair pair, Weight cap_s);

/// Pairwise sums of `a` and `b` minus the doubly counted offset, restricted
/// to w <= cap_s. Throws NegativeCombined if a combined coordinate is < 0.
ParetoSet pareto_join(const ParetoSet& a, const ParetoSet& b, Weight offset_w, Value offset_a,
                      Weight cap_s);

ParetoSet pareto_union(const ParetoSet& a, const ParetoSet& b, Weight cap_s);

}  // namespace gk
