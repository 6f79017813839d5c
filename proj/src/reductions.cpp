#include "gk/reductions.hpp"

#include <algorithm>

namespace gk {
namespace {

void check_source(const SimpleGraph& g) {
  Instance probe;
  probe.n = g.n;
  probe.weight.assign(g.n, 0);
  probe.value.assign(g.n, 0);
  for (auto [u, v] : g.edges) probe.edges.push_back({u, v, 1});
  validate_instance(probe);
}

void check_items(const KnapsackItems& items) {
  if (items.size.empty() || items.size.size() != items.profit.size())
    throw Error(ErrorCode::BadArgument, "items need matching, nonempty size and profit lists");
}

}  // namespace

std::string to_string(VertexRole role) {
  switch (role) {
    case VertexRole::U: return "u";
    case VertexRole::G: return "g";
    case VertexRole::H: return "h";
    case VertexRole::Hub: return "hub";
    case VertexRole::Center: return "center";
    case VertexRole::Leaf: return "leaf";
    case VertexRole::V: return "v";
    case VertexRole::W: return "w";
    case VertexRole::Vertex: return "vertex";
  }
  return "?";
}

ReductionOutput reduce_vertex_cover_to_connected(const SimpleGraph& g, int k) {
  check_source(g);
  if (k < 0) throw Error(ErrorCode::BadArgument, "k must be non-negative");
  const int n = g.n, m = static_cast<int>(g.edges.size());
  ReductionOutput out;
  out.reduction = "vc";
  out.source_graph = g;
  out.parameters = {{"k", k}};
  Instance& inst = out.instance;
  inst.variant = Variant::Connected;
  inst.n = 2 * n + m;
  inst.weight.assign(inst.n, 0);
  inst.value.assign(inst.n, 0);
  for (int i = 0; i < n; ++i) {
    inst.weight[i] = 1;
    out.provenance.push_back({VertexRole::U, i});
  }
  for (int i = 0; i < n; ++i) out.provenance.push_back({VertexRole::G, i});
  for (int e = 0; e < m; ++e) {
    inst.value[2 * n + e] = 1;
    out.provenance.push_back({VertexRole::H, e});
  }
  for (int i = 0; i < n; ++i) inst.edges.push_back({i, n + i, 1});
  for (int i = 0; i + 1 < n; ++i) inst.edges.push_back({n + i, n + i + 1, 1});
  for (int e = 0; e < m; ++e) {
    inst.edges.push_back({g.edges[e].first, 2 * n + e, 1});
    inst.edges.push_back({g.edges[e].second, 2 * n + e, 1});
  }
  inst.s = k;
  inst.d = m;
  inst = validate_instance(inst);
  return out;
}

ReductionOutput reduce_knapsack_to_star_connected(const KnapsackItems& items) {
  check_items(items);
  const int n = static_cast<int>(items.size.size());
  ReductionOutput out;
  out.reduction = "star";
  out.source_items = items;
  Instance& inst = out.instance;
  inst.variant = Variant::Connected;
  inst.n = n + 1;
  inst.weight.assign(inst.n, 0);
  inst.value.assign(inst.n, 0);
  out.provenance.push_back({VertexRole::Center, -1});
  for (int i = 0; i < n; ++i) {
    inst.weight[i + 1] = items.size[i];
    inst.value[i + 1] = items.profit[i];
    inst.edges.push_back({0, i + 1, 1});
    out.provenance.push_back({VertexRole::Leaf, i});
  }
  inst.s = items.capacity;
  inst.d = items.target;
  inst = validate_instance(inst);
  return out;
}

ReductionOutput reduce_partial_vc_to_connected(const SimpleGraph& g, int k, int covered) {
  check_source(g);
  const int n = g.n, m = static_cast<int>(g.edges.size());
  if (k < 0 || covered < 0 || covered > m) throw Error(ErrorCode::BadArgument, "need k >= 0 and 0 <= l <= m");
  ReductionOutput out;
  out.reduction = "pvc";
  out.source_graph = g;
  out.parameters = {{"k", k}, {"l", covered}};
  Instance& inst = out.instance;
  inst.variant = Variant::Connected;
  inst.n = n + m + 1;
  inst.weight.assign(inst.n, 0);
  inst.value.assign(inst.n, 0);
  const Vertex hub = n + m;
  for (int i = 0; i < n; ++i) {
    inst.weight[i] = 1;
    inst.edges.push_back({i, hub, 1});
    out.provenance.push_back({VertexRole::U, i});
  }
  for (int e = 0; e < m; ++e) {
    inst.value[n + e] = 1;
    inst.edges.push_back({g.edges[e].first, n + e, 1});
    inst.edges.push_back({g.edges[e].second, n + e, 1});
    out.provenance.push_back({VertexRole::H, e});
  }
  out.provenance.push_back({VertexRole::Hub, -1});
  inst.s = k;
  inst.d = covered;
  inst = validate_instance(inst);
  return out;
}

ReductionOutput reduce_hamiltonian_to_path(const SimpleGraph& g, Vertex x, Vertex y) {
  check_source(g);
  if (x == y) throw Error(ErrorCode::BadArgument, "x and y must differ");
  ReductionOutput out;
  out.reduction = "ham";
  out.source_graph = g;
  out.parameters = {{"x", x}, {"y", y}};
  Instance& inst = out.instance;
  inst.variant = Variant::Path;
  inst.n = g.n;
  inst.weight.assign(g.n, 0);
  inst.value.assign(g.n, 1);
  for (auto [u, v] : g.edges) inst.edges.push_back({u, v, 1});
  for (int i = 0; i < g.n; ++i) out.provenance.push_back({VertexRole::Vertex, i});
  inst.s = 0;
  inst.d = g.n;
  inst.x = x;
  inst.y = y;
  inst = validate_instance(inst);
  return out;
}

ReductionOutput reduce_knapsack_to_path_gadget(const KnapsackItems& items, Variant variant) {
  check_items(items);
  if (variant == Variant::Connected) throw Error(ErrorCode::VariantMismatch, "ladder gadget is for path variants");
  const int n = static_cast<int>(items.size.size());
  auto u = [](int i) { return i; };
  auto v = [n](int i) { return n + i; };
  auto w = [n](int i) { return 2 * n + i; };
  ReductionOutput out;
  out.reduction = "ladder";
  out.source_items = items;
  Instance& inst = out.instance;
  inst.variant = variant;
  inst.n = 3 * n + 1;
  inst.weight.assign(inst.n, 0);
  inst.value.assign(inst.n, 0);
  out.provenance.resize(inst.n);
  for (int i = 0; i <= n; ++i) out.provenance[u(i)] = {VertexRole::U, i};
  TreeDecomposition pd;
  for (int i = 1; i <= n; ++i) {
    out.provenance[v(i)] = {VertexRole::V, i - 1};
    out.provenance[w(i)] = {VertexRole::W, i - 1};
    inst.weight[v(i)] = items.size[i - 1];
    inst.value[v(i)] = items.profit[i - 1];
    for (Vertex mid : {v(i), w(i)}) {
      inst.edges.push_back({u(i - 1), mid, 1});
      inst.edges.push_back({u(i), mid, 1});
    }
    std::vector<Vertex> left{u(i - 1), v(i), w(i)}, right{v(i), w(i), u(i)};
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    pd.bags.push_back(left);
    pd.bags.push_back(right);
  }
  for (std::size_t b = 0; b < pd.bags.size(); ++b)
    pd.parent.push_back(b + 1 < pd.bags.size() ? static_cast<int>(b + 1) : -1);
  out.path_decomposition = std::move(pd);
  inst.s = items.capacity;
  inst.d = items.target;
  inst.x = u(0);
  inst.y = u(n);
  inst = validate_instance(inst);
  return out;
}

}  // namespace gk
