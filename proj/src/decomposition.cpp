#include "gk/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gk/random.hpp"

namespace gk {

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Leaf: return "leaf";
    case NodeKind::IntroduceVertex: return "introduce_vertex";
    case NodeKind::IntroduceEdge: return "introduce_edge";
    case NodeKind::ForgetVertex: return "forget_vertex";
    case NodeKind::Join: return "join";
  }
  return "?";
}

int TreeDecomposition::width() const {
  std::size_t widest = 0;
  for (const auto& bag : bags) widest = std::max(widest, bag.size());
  return static_cast<int>(widest) - 1;
}

std::vector<int> NiceDecomposition::bottom_up_order() const {
  std::vector<int> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return nodes[a].depth > nodes[b].depth; });
  return order;
}

std::vector<Vertex> elimination_order_minfill(const Instance& inst, std::uint64_t seed) {
  const int n = inst.n;
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : inst.edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<std::int64_t> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  if (seed != 0) {
    Rng rng(seed);
    rng.shuffle(rank);
  }

  std::vector<char> gone(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    std::int64_t pick_fill = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (gone[v]) continue;
      std::int64_t fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
        for (auto b = std::next(a); b != adj[v].end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (pick < 0 || fill < pick_fill || (fill == pick_fill && rank[v] < rank[pick])) {
        pick = v;
        pick_fill = fill;
      }
    }
    for (auto a = adj[pick].begin(); a != adj[pick].end(); ++a)
      for (auto b = std::next(a); b != adj[pick].end(); ++b) {
        adj[*a].insert(*b);
        adj[*b].insert(*a);
      }
    for (Vertex nb : adj[pick]) adj[nb].erase(pick);
    adj[pick].clear();
    gone[pick] = 1;
    order.push_back(pick);
  }
  return order;
}

TreeDecomposition tree_decomposition_from_order(const Instance& inst, const std::vector<Vertex>& order) {
  const int n = inst.n;
  if (static_cast<int>(order.size()) != n) throw Error(ErrorCode::BadArgument, "order is not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw Error(ErrorCode::BadArgument, "order is not a permutation");
    pos[v] = i;
  }
  std::vector<std::set<Vertex>> adj(n);
  for (const Edge& e : inst.edges) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }

  TreeDecomposition td;
  td.bags.resize(n);
  td.parent.assign(n, -1);
  for (Vertex v : order) {
    std::vector<Vertex> later(adj[v].begin(), adj[v].end());
    for (auto a = later.begin(); a != later.end(); ++a)
      for (auto b = std::next(a); b != later.end(); ++b) {
        adj[*a].insert(*b);
        adj[*b].insert(*a);
      }
    for (Vertex nb : later) adj[nb].erase(v);
    adj[v].clear();

    td.bags[v] = later;
    td.bags[v].push_back(v);
    std::sort(td.bags[v].begin(), td.bags[v].end());
    if (!later.empty())
      td.parent[v] = *std::min_element(later.begin(), later.end(),
                                       [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
  }
  return td;
}

namespace {

std::vector<Vertex> sorted_union(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<Vertex> sorted_difference(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<Vertex>& bag, Vertex v) { return std::binary_search(bag.begin(), bag.end(), v); }

class NiceBuilder {
 public:
  NiceBuilder(const TreeDecomposition& td, std::vector<Vertex> pinned) : td_(td), pinned_(std::move(pinned)) {
    children_.resize(td.bags.size());
    for (std::size_t t = 0; t < td.parent.size(); ++t)
      if (td.parent[t] >= 0) children_[td.parent[t]].push_back(static_cast<int>(t));
  }

  int build_root() {
    std::vector<int> branches;
    for (std::size_t t = 0; t < td_.parent.size(); ++t)
      if (td_.parent[t] < 0) branches.push_back(move_to(build(static_cast<int>(t)), pinned_));
    return combine(branches, pinned_);
  }

  std::vector<NiceNode>& nodes() { return nodes_; }

 private:
  int add(NiceNode node) {
    nodes_.push_back(std::move(node));
    return static_cast<int>(nodes_.size()) - 1;
  }

  int leaf() {
    NiceNode node;
    node.kind = NodeKind::Leaf;
    node.bag = pinned_;
    return add(std::move(node));
  }

  // Forgets then introduces vertices one at a time until the bag is `target`.
  int move_to(int id, const std::vector<Vertex>& target) {
    for (Vertex v : sorted_difference(nodes_[id].bag, target)) {
      NiceNode node;
      node.kind = NodeKind::ForgetVertex;
      node.vertex = v;
      node.bag = nodes_[id].bag;
      node.bag.erase(std::find(node.bag.begin(), node.bag.end(), v));
      node.children = {id};
      id = add(std::move(node));
    }
    for (Vertex v : sorted_difference(target, nodes_[id].bag)) {
      NiceNode node;
      node.kind = NodeKind::IntroduceVertex;
      node.vertex = v;
      node.bag = sorted_union(nodes_[id].bag, {v});
      node.children = {id};
      id = add(std::move(node));
    }
    return id;
  }

  int combine(const std::vector<int>& branches, const std::vector<Vertex>& bag) {
    if (branches.empty()) return move_to(leaf(), bag);
    int acc = branches.front();
    for (std::size_t i = 1; i < branches.size(); ++i) {
      NiceNode node;
      node.kind = NodeKind::Join;
      node.bag = bag;
      node.children = {acc, branches[i]};
      acc = add(std::move(node));
    }
    return acc;
  }

  int build(int t) {
    const std::vector<Vertex> target = sorted_union(td_.bags[t], pinned_);
    std::vector<int> branches;
    for (int c : children_[t]) branches.push_back(move_to(build(c), target));
    return combine(branches, target);
  }

  const TreeDecomposition& td_;
  std::vector<Vertex> pinned_;
  std::vector<std::vector<int>> children_;
  std::vector<NiceNode> nodes_;
};

}  // namespace

NiceDecomposition make_nice(const Instance& inst, const TreeDecomposition& td, std::vector<Vertex> pinned) {
  std::sort(pinned.begin(), pinned.end());
  pinned.erase(std::unique(pinned.begin(), pinned.end()), pinned.end());
  if (pinned.size() > 2) throw Error(ErrorCode::PinnedTooLarge, "at most two pinned vertices are supported");
  for (Vertex v : pinned)
    if (v < 0 || v >= inst.n) throw Error(ErrorCode::IdOutOfRange, "pinned vertex " + std::to_string(v));

  NiceBuilder builder(td, pinned);
  int root = builder.build_root();
  std::vector<NiceNode> raw = std::move(builder.nodes());

  // Edge {u,v} goes directly above the topmost node holding both endpoints:
  // either the root or the child of the node forgetting u or v.
  std::map<int, std::vector<Edge>> edges_above;
  for (const Edge& e : inst.edges) {
    int top = -1;
    for (std::size_t t = 0; t < raw.size() && top < 0; ++t) {
      const NiceNode& node = raw[t];
      if (node.kind != NodeKind::ForgetVertex || (node.vertex != e.u && node.vertex != e.v)) continue;
      const Vertex other = node.vertex == e.u ? e.v : e.u;
      const int child = node.children.front();
      if (contains(raw[child].bag, other)) top = child;
    }
    if (top < 0 && contains(raw[root].bag, e.u) && contains(raw[root].bag, e.v)) top = root;
    if (top < 0) throw Error(ErrorCode::EdgeNeverIntroduced, "tree decomposition misses an edge");
    edges_above[top].push_back(Edge{e.u, e.v, e.cost});
  }

  std::vector<int> parent_of(raw.size(), -1);
  for (std::size_t t = 0; t < raw.size(); ++t)
    for (int c : raw[t].children) parent_of[c] = static_cast<int>(t);
  for (auto& [top, edges] : edges_above) {
    int below = top;
    for (const Edge& e : edges) {
      NiceNode node;
      node.kind = NodeKind::IntroduceEdge;
      node.edge = e;
      node.bag = raw[below].bag;
      node.children = {below};
      raw.push_back(std::move(node));
      const int id = static_cast<int>(raw.size()) - 1;
      parent_of.push_back(-1);
      const int up = parent_of[below];
      if (up >= 0) {
        std::replace(raw[up].children.begin(), raw[up].children.end(), below, id);
        parent_of[id] = up;
      } else {
        root = id;
      }
      parent_of[below] = id;
      below = id;
    }
  }

  // Renumber in post-order from the root.
  NiceDecomposition nd;
  nd.pinned = pinned;
  std::vector<int> new_id(raw.size(), -1);
  std::vector<int> depth(raw.size(), 0);
  std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [t, next_child] = stack.back();
    if (next_child < raw[t].children.size()) {
      int c = raw[t].children[next_child++];
      depth[c] = depth[t] + 1;
      stack.push_back({c, 0});
      continue;
    }
    new_id[t] = static_cast<int>(nd.nodes.size());
    NiceNode node = raw[t];
    node.depth = depth[t];
    for (int& c : node.children) c = new_id[c];
    nd.nodes.push_back(std::move(node));
    stack.pop_back();
  }
  nd.root = new_id[root];
  std::size_t widest = 0;
  for (const NiceNode& node : nd.nodes) widest = std::max(widest, node.bag.size());
  nd.width = static_cast<int>(widest) - 1;
  return nd;
}

NiceDecomposition build_nice_decomposition(const Instance& inst, const std::vector<Vertex>& order,
                                           std::vector<Vertex> pinned) {
  return make_nice(inst, tree_decomposition_from_order(inst, order), std::move(pinned));
}

void validate_tree_decomposition(const Instance& inst, const TreeDecomposition& td) {
  const int count = static_cast<int>(td.bags.size());
  if (static_cast<int>(td.parent.size()) != count)
    throw Error(ErrorCode::BadNodeArity, "parent array size mismatch");
  for (int t = 0; t < count; ++t) {
    // Walking up must terminate, i.e. the parent relation is a forest.
    int hops = 0;
    for (int p = td.parent[t]; p >= 0; p = td.parent[p]) {
      if (p >= count || ++hops > count) throw Error(ErrorCode::BadNodeArity, "parent relation has a cycle");
    }
    if (!std::is_sorted(td.bags[t].begin(), td.bags[t].end()))
      throw Error(ErrorCode::BadBagTransition, "bags must be sorted");
    for (Vertex v : td.bags[t])
      if (v < 0 || v >= inst.n) throw Error(ErrorCode::IdOutOfRange, "bag vertex out of range");
  }
  for (const Edge& e : inst.edges) {
    bool covered = false;
    for (const auto& bag : td.bags) covered = covered || (contains(bag, e.u) && contains(bag, e.v));
    if (!covered)
      throw Error(ErrorCode::EdgeNeverIntroduced,
                  "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in any bag");
  }
  for (Vertex v = 0; v < inst.n; ++v) {
    int tops = 0;
    for (int t = 0; t < count; ++t)
      if (contains(td.bags[t], v) && (td.parent[t] < 0 || !contains(td.bags[td.parent[t]], v))) ++tops;
    if (tops != 1)
      throw Error(ErrorCode::BrokenSubtreeConnectivity,
                  "vertex " + std::to_string(v) + " occupies " + std::to_string(tops) + " separate subtrees");
  }
}

void validate_nice_decomposition(const Instance& inst, const NiceDecomposition& nd) {
  const int count = static_cast<int>(nd.nodes.size());
  if (nd.root < 0 || nd.root >= count) throw Error(ErrorCode::BadNodeArity, "root id out of range");

  std::vector<int> parent(count, -1);
  for (int t = 0; t < count; ++t)
    for (int c : nd.nodes[t].children) {
      if (c < 0 || c >= count || c == nd.root) throw Error(ErrorCode::BadNodeArity, "bad child id");
      if (parent[c] >= 0) throw Error(ErrorCode::BadNodeArity, "node with two parents");
      parent[c] = t;
    }
  std::vector<char> reached(count, 0);
  std::vector<int> stack{nd.root};
  reached[nd.root] = 1;
  int reached_count = 1;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    for (int c : nd.nodes[t].children)
      if (!reached[c]) {
        reached[c] = 1;
        ++reached_count;
        stack.push_back(c);
      }
  }
  if (reached_count != count) throw Error(ErrorCode::BadNodeArity, "nodes unreachable from the root");

  auto transition = [](int t, const std::string& what) {
    return Error(ErrorCode::BadBagTransition, "node " + std::to_string(t) + ": " + what);
  };
  std::size_t widest = 0;
  std::map<std::pair<Vertex, Vertex>, int> introduced;
  const Graph g(inst);
  for (int t = 0; t < count; ++t) {
    const NiceNode& node = nd.nodes[t];
    widest = std::max(widest, node.bag.size());
    if (!std::is_sorted(node.bag.begin(), node.bag.end()) ||
        std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end())
      throw transition(t, "bag not sorted or has repeats");
    for (Vertex v : node.bag)
      if (v < 0 || v >= inst.n) throw transition(t, "bag vertex out of range");
    for (Vertex p : nd.pinned)
      if (!contains(node.bag, p)) throw transition(t, "pinned vertex " + std::to_string(p) + " missing");

    const std::size_t expected_children = node.kind == NodeKind::Leaf ? 0 : node.kind == NodeKind::Join ? 2 : 1;
    if (node.children.size() != expected_children)
      throw Error(ErrorCode::BadNodeArity, "node " + std::to_string(t) + " (" + std::string(to_string(node.kind)) +
                                               ") has " + std::to_string(node.children.size()) + " children");
    switch (node.kind) {
      case NodeKind::Leaf:
        if (node.bag != nd.pinned) throw transition(t, "leaf bag differs from the pinned set");
        break;
      case NodeKind::IntroduceVertex: {
        const auto& child = nd.nodes[node.children[0]].bag;
        if (contains(child, node.vertex) || node.bag != sorted_union(child, {node.vertex}))
          throw transition(t, "introduce must add exactly its vertex");
        break;
      }
      case NodeKind::ForgetVertex: {
        const auto& child = nd.nodes[node.children[0]].bag;
        if (!contains(child, node.vertex) || node.bag != sorted_difference(child, {node.vertex}))
          throw transition(t, "forget must remove exactly its vertex");
        break;
      }
      case NodeKind::IntroduceEdge: {
        const auto& child = nd.nodes[node.children[0]].bag;
        if (node.bag != child) throw transition(t, "introduce-edge must keep the bag");
        if (!contains(node.bag, node.edge.u) || !contains(node.bag, node.edge.v))
          throw transition(t, "introduced edge endpoints not in bag");
        auto key = std::minmax(node.edge.u, node.edge.v);
        if (!g.adjacent(key.first, key.second)) throw transition(t, "introduced edge not in the graph");
        ++introduced[{key.first, key.second}];
        break;
      }
      case NodeKind::Join:
        for (int c : node.children)
          if (nd.nodes[c].bag != node.bag) throw transition(t, "join children bags differ");
        break;
    }
  }
  if (nd.nodes[nd.root].bag != nd.pinned)
    throw Error(ErrorCode::RootNotPinnedBag, "root bag differs from the pinned set");
  if (nd.width != static_cast<int>(widest) - 1) throw Error(ErrorCode::BadField, "reported width is wrong");

  for (const Edge& e : inst.edges) {
    auto it = introduced.find({e.u, e.v});
    const int times = it == introduced.end() ? 0 : it->second;
    if (times == 0)
      throw Error(ErrorCode::EdgeNeverIntroduced, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (times > 1)
      throw Error(ErrorCode::EdgeIntroducedTwice, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  }

  std::vector<int> tops(inst.n, 0);
  for (int t = 0; t < count; ++t)
    for (Vertex v : nd.nodes[t].bag)
      if (parent[t] < 0 || !contains(nd.nodes[parent[t]].bag, v)) ++tops[v];
  for (Vertex v = 0; v < inst.n; ++v)
    if (tops[v] != 1)
      throw Error(ErrorCode::BrokenSubtreeConnectivity,
                  "vertex " + std::to_string(v) + " occupies " + std::to_string(tops[v]) + " separate subtrees");

  for (int t = 0; t < count; ++t) {
    const int expected = parent[t] < 0 ? 0 : nd.nodes[parent[t]].depth + 1;
    if (nd.nodes[t].depth != expected) throw Error(ErrorCode::BadField, "node depth inconsistent");
  }
}

}  // namespace gk
