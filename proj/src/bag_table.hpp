#pragma once

// Storage shared by the two treewidth dynamic programs. A state is a byte
// string with one byte per bag position; the DP decides what the bytes mean.

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "gk/pareto.hpp"

namespace gk::detail {

using StateKey = std::string;

struct Label {
  Weight w = 0;
  Value a = 0;
  std::array<int, 2> row{-1, -1};    // child rows (second only for joins)
  std::array<int, 2> label{-1, -1};  // label index inside those rows
};

struct Row {
  StateKey key;
  std::vector<Label> labels;
};

class NodeTable {
 public:
  std::vector<Label>& labels_for(const StateKey& key) {
    auto [it, inserted] = index_.try_emplace(key, static_cast<int>(rows_.size()));
    if (inserted) rows_.push_back(Row{key, {}});
    return rows_[it->second].labels;
  }

  /// Prunes every row to its undominated labels and drops empty rows.
  void finalize(Weight cap) {
    std::vector<Row> kept;
    kept.reserve(rows_.size());
    for (Row& row : rows_) {
      keep_undominated(row.labels, cap);
      if (!row.labels.empty()) kept.push_back(std::move(row));
    }
    rows_ = std::move(kept);
    index_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) index_.emplace(rows_[i].key, static_cast<int>(i));
  }

  const std::vector<Row>& rows() const { return rows_; }

  const Row* find(const StateKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? nullptr : &rows_[it->second];
  }

  int row_index(const StateKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
  }

 private:
  std::vector<Row> rows_;
  std::unordered_map<StateKey, int> index_;
};

/// Position of `v` in a sorted bag.
inline int bag_position(const std::vector<Vertex>& bag, Vertex v) {
  for (std::size_t i = 0; i < bag.size(); ++i)
    if (bag[i] == v) return static_cast<int>(i);
  return -1;
}

/// Small union-find over bag positions.
class PositionUnion {
 public:
  explicit PositionUnion(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<int>(i);
  }
  int find(int i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  /// Returns false when both were already in the same set.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace gk::detail
