#include "gk/connected_solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "bag_table.hpp"

namespace gk {
namespace {

using detail::Label;
using detail::NodeTable;
using detail::PositionUnion;
using detail::Row;
using detail::StateKey;

// State byte per bag position: 0 = outside the solution, k >= 1 = member of
// the k-th component trace. Traces are numbered by first position.
void canonicalize(StateKey& key) {
  std::array<char, 256> relabel{};
  char next = 1;
  for (char& c : key) {
    if (c == 0) continue;
    auto& slot = relabel[static_cast<unsigned char>(c)];
    if (slot == 0) slot = next++;
    c = slot;
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

class ConnectedDp {
 public:
  ConnectedDp(const Instance& inst, Vertex root, const NiceDecomposition& nd, const ConnectedOptions& options)
      : inst_(inst), root_(root), nd_(nd), options_(options), tables_(nd.nodes.size()) {}

  RootedFrontier run() {
    RootedFrontier out;
    for (int t : nd_.bottom_up_order()) {
      process(t);
      tables_[t].finalize(inst_.s);
      out.stats.states_touched += static_cast<std::int64_t>(tables_[t].rows().size());
      ++out.stats.nodes_expanded;
    }
    const NodeTable& top = tables_[nd_.root];
    const Row* accept = top.find(StateKey(1, 1));
    std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
    if (accept) {
      const int row = top.row_index(accept->key);
      for (std::size_t l = 0; l < accept->labels.size(); ++l)
        candidates.push_back({{accept->labels[l].w, accept->labels[l].a}, witness(nd_.root, row, static_cast<int>(l))});
    }
    out.result = merge_witnessed(std::move(candidates), inst_.s);
    return out;
  }

 private:
  void process(int t) {
    const NiceNode& node = nd_.nodes[t];
    NodeTable& table = tables_[t];
    switch (node.kind) {
      case NodeKind::Leaf: {
        // Leaf bag is {root}; the root is always inside the solution.
        if (inst_.weight[root_] <= inst_.s) {
          Label l;
          l.w = inst_.weight[root_];
          l.a = inst_.value[root_];
          table.labels_for(StateKey(1, 1)).push_back(l);
        }
        break;
      }
      case NodeKind::IntroduceVertex: {
        const int child = node.children[0];
        const int p = detail::bag_position(node.bag, node.vertex);
        const Vertex u = node.vertex;
        const auto& rows = tables_[child].rows();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          StateKey out_key = rows[r].key;
          out_key.insert(out_key.begin() + p, 0);
          StateKey in_key = rows[r].key;
          in_key.insert(in_key.begin() + p, 127);
          canonicalize(in_key);
          auto& out_labels = table.labels_for(out_key);
          for (std::size_t l = 0; l < rows[r].labels.size(); ++l)
            out_labels.push_back(derived(rows[r].labels[l], static_cast<int>(r), static_cast<int>(l), 0, 0));
          auto& in_labels = table.labels_for(in_key);
          for (std::size_t l = 0; l < rows[r].labels.size(); ++l)
            if (rows[r].labels[l].w + inst_.weight[u] <= inst_.s)
              in_labels.push_back(derived(rows[r].labels[l], static_cast<int>(r), static_cast<int>(l),
                                          inst_.weight[u], inst_.value[u]));
        }
        break;
      }
      case NodeKind::IntroduceEdge: {
        const int child = node.children[0];
        const int pa = detail::bag_position(node.bag, node.edge.u);
        const int pb = detail::bag_position(node.bag, node.edge.v);
        const auto& rows = tables_[child].rows();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          StateKey key = rows[r].key;
          const char ka = key[pa], kb = key[pb];
          // Both endpoints inside: the edge belongs to the induced subgraph
          // and forces their traces together.
          if (ka != 0 && kb != 0 && ka != kb) {
            for (char& c : key)
              if (c == kb) c = ka;
            canonicalize(key);
          }
          copy_row(table.labels_for(key), rows[r], static_cast<int>(r));
        }
        break;
      }
      case NodeKind::ForgetVertex: {
        const int child = node.children[0];
        const int p = detail::bag_position(nd_.nodes[child].bag, node.vertex);
        const auto& rows = tables_[child].rows();
        for (std::size_t r = 0; r < rows.size(); ++r) {
          const StateKey& old_key = rows[r].key;
          const char block = old_key[p];
          if (block != 0 && std::count(old_key.begin(), old_key.end(), block) == 1) continue;
          StateKey key = old_key;
          key.erase(key.begin() + p);
          canonicalize(key);
          copy_row(table.labels_for(key), rows[r], static_cast<int>(r));
        }
        break;
      }
      case NodeKind::Join:
        join(t);
        break;
    }
  }

  void copy_row(std::vector<Label>& dst, const Row& src, int row) {
    for (std::size_t l = 0; l < src.labels.size(); ++l)
      dst.push_back(derived(src.labels[l], row, static_cast<int>(l), 0, 0));
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
        const StateKey& k2 = right[r2].key;
        StateKey merged;
        if (options_.restricted_join) {
          if (k1 != k2) continue;
          merged = k1;
        } else {
          merged = merge_partitions(k1, k2);
        }
        auto& dst = tables_[t].labels_for(merged);
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

  static StateKey merge_partitions(const StateKey& k1, const StateKey& k2) {
    PositionUnion uf(k1.size());
    for (const StateKey* key : {&k1, &k2}) {
      std::array<int, 256> first;
      first.fill(-1);
      for (std::size_t i = 0; i < key->size(); ++i) {
        const auto c = static_cast<unsigned char>((*key)[i]);
        if (c == 0) continue;
        if (first[c] < 0) first[c] = static_cast<int>(i);
        else uf.unite(first[c], static_cast<int>(i));
      }
    }
    StateKey merged(k1.size(), 0);
    for (std::size_t i = 0; i < k1.size(); ++i)
      if (k1[i] != 0) merged[i] = static_cast<char>(uf.find(static_cast<int>(i)) + 1);
    canonicalize(merged);
    return merged;
  }

  std::vector<Vertex> witness(int node, int row, int label) const {
    std::set<Vertex> members;
    std::vector<std::array<int, 3>> stack{{node, row, label}};
    while (!stack.empty()) {
      auto [t, r, l] = stack.back();
      stack.pop_back();
      const NiceNode& nn = nd_.nodes[t];
      const Row& current = tables_[t].rows()[r];
      for (std::size_t i = 0; i < nn.bag.size(); ++i)
        if (current.key[i] != 0) members.insert(nn.bag[i]);
      const Label& lab = current.labels[l];
      for (std::size_t c = 0; c < nn.children.size(); ++c) stack.push_back({nn.children[c], lab.row[c], lab.label[c]});
    }
    return {members.begin(), members.end()};
  }

  const Instance& inst_;
  Vertex root_;
  const NiceDecomposition& nd_;
  ConnectedOptions options_;
  std::vector<NodeTable> tables_;
};

}  // namespace

RootedFrontier solve_connected_rooted(const Instance& inst, Vertex root, const NiceDecomposition& nd,
                                      const ConnectedOptions& options) {
  if (nd.pinned != std::vector<Vertex>{root})
    throw Error(ErrorCode::BadArgument, "decomposition must be pinned at the root vertex");
  return ConnectedDp(inst, root, nd, options).run();
}

SolveReport solve_connected(const Instance& inst, const ConnectedOptions& options) {
  if (inst.variant != Variant::Connected) throw Error(ErrorCode::VariantMismatch, "connected solver needs a connected instance");
  const auto started = std::chrono::steady_clock::now();
  const std::vector<Vertex> order = elimination_order_minfill(inst, options.decomposition_seed);

  SolveStats stats;
  std::vector<std::pair<ParetoPair, std::vector<Vertex>>> candidates;
  candidates.push_back({{0, 0}, {}});
  for (Vertex v = 0; v < inst.n; ++v) {
    if (inst.weight[v] > inst.s) continue;
    const NiceDecomposition nd = build_nice_decomposition(inst, order, {v});
    RootedFrontier rooted = solve_connected_rooted(inst, v, nd, options);
    stats.nodes_expanded += rooted.stats.nodes_expanded;
    stats.states_touched += rooted.stats.states_touched;
    for (std::size_t i = 0; i < rooted.result.frontier.size(); ++i)
      candidates.push_back({rooted.result.frontier.pairs()[i], std::move(rooted.result.witnesses[i])});
  }
  SolveReport report = make_report(inst, merge_witnessed(std::move(candidates), inst.s));
  stats.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  report.stats = stats;
  return report;
}

}  // namespace gk
