#include <algorithm>
#include <array>
#include <chrono>
#include <map>

#include "bag_table.hpp"
#include "gk/path_solver.hpp"

namespace gk {
namespace {

using detail::Label;
using detail::NodeTable;
using detail::PositionUnion;
using detail::Row;
using detail::StateKey;

// State byte per bag position: 0 = outside, otherwise (block << 2) | degree,
// where a block is a partial path segment and degree counts chosen edges.
constexpr int kMaxBlocks = 63;

int block_of(char c) { return static_cast<unsigned char>(c) >> 2; }
int degree_of(char c) { return static_cast<unsigned char>(c) & 3; }
char make_state(int block, int degree) { return static_cast<char>((block << 2) | degree); }

void canonicalize(StateKey& key) {
  std::array<int, 64> relabel{};
  int next = 1;
  for (char& c : key) {
    if (c == 0) continue;
    int& slot = relabel[block_of(c)];
    if (slot == 0) slot = next++;
    c = make_state(slot, degree_of(c));
  }
}

std::string in_mask(const StateKey& key) {
  std::string mask(key.size(), 0);
  for (std::size_t i = 0; i < key.size(); ++i) mask[i] = key[i] != 0;
  return mask;
}

Label derived(const Label& from, int row, int label, Weight dw, Value da) {
  Label out;
  out.w = from.w + dw;
  out.a = from.a + da;
  out.row = {row, -1};
  out.label = {label, -1};
  return out;
}

class PathDp {
 public:
  PathDp(const Instance& inst, const NiceDecomposition& nd)
      : inst_(inst), nd_(nd), x_(*inst.x), y_(*inst.y), tables_(nd.nodes.size()) {}

  SolveReport run() {
    const auto started = std::chrono::steady_clock::now();
    SolveStats stats;
    for (int t : nd_.bottom_up_order()) {
      process(t);
      tables_[t].finalize(inst_.s);
      stats.states_touched += static_cast<std::int64_t>(tables_[t].rows().size());
      ++stats.nodes_expanded;
    }
    const NodeTable& top = tables_[nd_.root];
    std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
    const StateKey accept{make_state(1, 1), make_state(1, 1)};
    if (const Row* row = top.find(accept)) {
      const int r = top.row_index(accept);
      for (std::size_t l = 0; l < row->labels.size(); ++l)
        candidates.push_back({{row->labels[l].w, row->labels[l].a}, witness(nd_.root, r, static_cast<int>(l))});
    }
    SolveReport report = make_report(inst_, merge_witnessed(std::move(candidates), inst_.s));
    stats.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    report.stats = stats;
    return report;
  }

 private:
  int cap(Vertex v) const { return v == x_ || v == y_ ? 1 : 2; }

  void process(int t) {
    const NiceNode& node = nd_.nodes[t];
    NodeTable& table = tables_[t];
    if (node.bag.size() > static_cast<std::size_t>(kMaxBlocks))
      throw Error(ErrorCode::TooLarge, "bag too large for the path state encoding");
    switch (node.kind) {
      case NodeKind::Leaf: {
        const Weight w = inst_.weight[x_] + inst_.weight[y_];
        if (w <= inst_.s) {
          Label l;
          l.w = w;
          l.a = inst_.value[x_] + inst_.value[y_];
          table.labels_for(StateKey{make_state(1, 0), make_state(2, 0)}).push_back(l);
        }
        break;
      }
      case NodeKind::IntroduceVertex: {
        const int p = detail::bag_position(node.bag, node.vertex);
        const Vertex u = node.vertex;
        const auto& rows = tables_[node.children[0]].rows();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          StateKey out_key = rows[r].key;
          out_key.insert(out_key.begin() + p, 0);
          StateKey in_key = rows[r].key;
          in_key.insert(in_key.begin() + p, make_state(kMaxBlocks, 0));
          canonicalize(in_key);
          copy_row(table.labels_for(out_key), rows[r], static_cast<int>(r), 0, 0);
          copy_row(table.labels_for(in_key), rows[r], static_cast<int>(r), inst_.weight[u], inst_.value[u]);
        }
        break;
      }
      case NodeKind::IntroduceEdge: {
        const int pa = detail::bag_position(node.bag, node.edge.u);
        const int pb = detail::bag_position(node.bag, node.edge.v);
        const auto& rows = tables_[node.children[0]].rows();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const StateKey& key = rows[r].key;
          copy_row(table.labels_for(key), rows[r], static_cast<int>(r), 0, 0);
          const char ca = key[pa], cb = key[pb];
          if (ca == 0 || cb == 0 || block_of(ca) == block_of(cb)) continue;
          if (degree_of(ca) >= cap(node.edge.u) || degree_of(cb) >= cap(node.edge.v)) continue;
          StateKey used = key;
          const int from = block_of(cb), to = block_of(ca);
          for (char& c : used)
            if (c != 0 && block_of(c) == from) c = make_state(to, degree_of(c));
          used[pa] = make_state(to, degree_of(ca) + 1);
          used[pb] = make_state(to, degree_of(cb) + 1);
          canonicalize(used);
          copy_row(table.labels_for(used), rows[r], static_cast<int>(r), 0, 0);
        }
        break;
      }
      case NodeKind::ForgetVertex: {
        const int child = node.children[0];
        const int p = detail::bag_position(nd_.nodes[child].bag, node.vertex);
        const auto& rows = tables_[child].rows();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const char c = rows[r].key[p];
          if (c != 0 && degree_of(c) != 2) continue;
          StateKey key = rows[r].key;
          key.erase(key.begin() + p);
          canonicalize(key);
          copy_row(table.labels_for(key), rows[r], static_cast<int>(r), 0, 0);
        }
        break;
      }
      case NodeKind::Join:
        join(t);
        break;
    }
  }

  void copy_row(std::vector<Label>& dst, const Row& src, int row, Weight dw, Value da) {
    for (std::size_t l = 0; l < src.labels.size(); ++l)
      if (src.labels[l].w + dw <= inst_.s) dst.push_back(derived(src.labels[l], row, static_cast<int>(l), dw, da));
  }

  std::optional<StateKey> merge(const std::vector<Vertex>& bag, const StateKey& k1, const StateKey& k2) const {
    StateKey merged(k1.size(), 0);
    for (std::size_t i = 0; i < k1.size(); ++i) {
      if (k1[i] == 0) continue;
      const int deg = degree_of(k1[i]) + degree_of(k2[i]);
      if (deg > cap(bag[i])) return std::nullopt;
      merged[i] = make_state(0, deg);
    }
    PositionUnion uf(k1.size());
    for (const StateKey* key : {&k1, &k2}) {
      std::array<int, 64> last;
      last.fill(-1);
      for (std::size_t i = 0; i < key->size(); ++i) {
        const char c = (*key)[i];
        if (c == 0) continue;
        int& prev = last[block_of(c)];
        if (prev >= 0 && !uf.unite(prev, static_cast<int>(i))) return std::nullopt;
        prev = static_cast<int>(i);
      }
    }
    for (std::size_t i = 0; i < merged.size(); ++i)
      if (k1[i] != 0) merged[i] = make_state(uf.find(static_cast<int>(i)) + 1, degree_of(merged[i]));
    canonicalize(merged);
    return merged;
  }

  void join(int t) {
    const NiceNode& node = nd_.nodes[t];
    const auto& left = tables_[node.children[0]].rows();
    const auto& right = tables_[node.children[1]].rows();
    std::map<std::string, std::vector<int>> right_by_mask;
    for (std::size_t r = 0; r < right.size(); ++r) right_by_mask[in_mask(right[r].key)].push_back(static_cast<int>(r));

    for (std::size_t r1 = 0; r1 < left.size(); ++r1) {
      const StateKey& k1 = left[r1].key;
      auto bucket = right_by_mask.find(in_mask(k1));
      if (bucket == right_by_mask.end()) continue;
      Weight shared_w = 0;
      Value shared_a = 0;
      for (std::size_t i = 0; i < k1.size(); ++i)
        if (k1[i] != 0) {
          shared_w += inst_.weight[node.bag[i]];
          shared_a += inst_.value[node.bag[i]];
        }
      for (int r2 : bucket->second) {
        const auto merged = merge(node.bag, k1, right[r2].key);
        if (!merged) continue;
        auto& dst = tables_[t].labels_for(*merged);
        for (std::size_t l1 = 0; l1 < left[r1].labels.size(); ++l1)
          for (std::size_t l2 = 0; l2 < right[r2].labels.size(); ++l2) {
            const Label& a = left[r1].labels[l1];
            const Label& b = right[r2].labels[l2];
            const Weight w = a.w + b.w - shared_w;
            if (w > inst_.s) continue;
            Label out;
            out.w = w;
            out.a = a.a + b.a - shared_a;
            out.row = {static_cast<int>(r1), r2};
            out.label = {static_cast<int>(l1), static_cast<int>(l2)};
            dst.push_back(out);
          }
      }
    }
  }

  std::vector<Vertex> witness(int node, int row, int label) const {
    std::map<Vertex, std::vector<Vertex>> adj;
    std::vector<std::array<int, 3>> stack{{node, row, label}};
    while (!stack.empty()) {
      auto [t, r, l] = stack.back();
      stack.pop_back();
      const NiceNode& nn = nd_.nodes[t];
      const Row& current = tables_[t].rows()[r];
      const Label& lab = current.labels[l];
      if (nn.kind == NodeKind::IntroduceEdge) {
        const Row& below = tables_[nn.children[0]].rows()[lab.row[0]];
        const int pa = detail::bag_position(nn.bag, nn.edge.u);
        if (current.key[pa] != 0 && degree_of(current.key[pa]) > degree_of(below.key[pa])) {
          adj[nn.edge.u].push_back(nn.edge.v);
          adj[nn.edge.v].push_back(nn.edge.u);
        }
      }
      for (std::size_t c = 0; c < nn.children.size(); ++c) stack.push_back({nn.children[c], lab.row[c], lab.label[c]});
    }
    std::vector<Vertex> path{x_};
    Vertex prev = -1, cur = x_;
    while (cur != y_) {
      const auto& next = adj[cur];
      const Vertex step = next[0] != prev ? next[0] : next[1];
      prev = cur;
      cur = step;
      path.push_back(cur);
    }
    return path;
  }

  const Instance& inst_;
  const NiceDecomposition& nd_;
  Vertex x_;
  Vertex y_;
  std::vector<NodeTable> tables_;
};

SolveReport single_vertex_path(const Instance& inst) {
  const Vertex x = *inst.x;
  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  candidates.push_back({{inst.weight[x], inst.value[x]}, {x}});
  SolveReport report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  report.stats.nodes_expanded = 1;
  report.stats.states_touched = 1;
  return report;
}

}  // namespace

SolveReport solve_path_treewidth(const Instance& inst, const NiceDecomposition& nd) {
  if (inst.variant == Variant::Connected)
    throw Error(ErrorCode::VariantMismatch, "path solvers need x and y terminals");
  if (*inst.x == *inst.y) return single_vertex_path(inst);
  std::vector<Vertex> pins{*inst.x, *inst.y};
  std::sort(pins.begin(), pins.end());
  if (nd.pinned != pins) throw Error(ErrorCode::BadArgument, "decomposition must be pinned at {x, y}");
  return PathDp(inst, nd).run();
}

SolveReport solve_path_treewidth(const Instance& inst, std::uint64_t decomposition_seed) {
  if (inst.variant == Variant::Connected)
    throw Error(ErrorCode::VariantMismatch, "path solvers need x and y terminals");
  if (*inst.x == *inst.y) return single_vertex_path(inst);
  const NiceDecomposition nd =
      build_nice_decomposition(inst, elimination_order_minfill(inst, decomposition_seed), {*inst.x, *inst.y});
  return solve_path_treewidth(inst, nd);
}

}  // namespace gk
