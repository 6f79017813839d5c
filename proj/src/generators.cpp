#include "gk/generators.hpp"

#include <algorithm>
#include <cmath>

namespace gk {

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::Tree: return "tree";
    case GraphFamily::Gnp: return "gnp";
    case GraphFamily::Grid: return "grid";
  }
  return "?";
}

GraphFamily family_from_string(const std::string& name) {
  if (name == "tree") return GraphFamily::Tree;
  if (name == "gnp") return GraphFamily::Gnp;
  if (name == "grid") return GraphFamily::Grid;
  throw Error(ErrorCode::BadArgument, "unknown graph family '" + name + "'");
}

Instance random_instance(const RandomSpec& spec, std::uint64_t seed) {
  if (spec.n < 1) throw Error(ErrorCode::BadArgument, "n must be positive");
  if (spec.max_weight < 0 || spec.max_value < 0 || spec.max_s < 0 || spec.max_cost < 1)
    throw Error(ErrorCode::BadArgument, "bad generator bounds");
  if (spec.p < 0.0 || spec.p > 1.0) throw Error(ErrorCode::BadArgument, "p must lie in [0, 1]");
  Rng rng(seed);
  const int n = spec.n;
  Instance inst;
  inst.variant = spec.variant;
  inst.n = n;

  std::vector<std::pair<Vertex, Vertex>> pairs;
  switch (spec.family) {
    case GraphFamily::Tree:
      for (Vertex v = 1; v < n; ++v) pairs.push_back({static_cast<Vertex>(rng.uniform(0, v - 1)), v});
      break;
    case GraphFamily::Gnp:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
          if (rng.bernoulli(spec.p)) pairs.push_back({u, v});
      break;
    case GraphFamily::Grid: {
      const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n))));
      for (Vertex v = 0; v < n; ++v) {
        if ((v + 1) % cols != 0 && v + 1 < n) pairs.push_back({v, v + 1});
        if (v + cols < n) pairs.push_back({v, v + cols});
      }
      break;
    }
  }
  // Relabel so structure is not tied to id order.
  std::vector<Vertex> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = v;
  rng.shuffle(label);
  for (auto [u, v] : pairs) {
    const Cost c = spec.variant == Variant::ShortestPath ? rng.uniform(1, spec.max_cost) : 1;
    inst.edges.push_back({label[u], label[v], c});
  }
  for (Vertex v = 0; v < n; ++v) {
    inst.weight.push_back(rng.uniform(0, spec.max_weight));
    inst.value.push_back(rng.uniform(0, spec.max_value));
  }
  inst.s = spec.s ? *spec.s : rng.uniform(0, spec.max_s);
  inst.d = spec.d;
  if (spec.variant != Variant::Connected) {
    inst.x = static_cast<Vertex>(rng.uniform(0, n - 1));
    inst.y = static_cast<Vertex>(rng.uniform(0, n - 1));
  }
  return validate_instance(std::move(inst));
}

SimpleGraph random_source_graph(int n, double p, int max_degree, Rng& rng) {
  if (n < 1) throw Error(ErrorCode::BadArgument, "n must be positive");
  std::vector<std::pair<Vertex, Vertex>> candidates;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) candidates.push_back({u, v});
  rng.shuffle(candidates);
  SimpleGraph g;
  g.n = n;
  std::vector<int> degree(n, 0);
  for (auto [u, v] : candidates) {
    if (!rng.bernoulli(p) || degree[u] >= max_degree || degree[v] >= max_degree) continue;
    ++degree[u];
    ++degree[v];
    g.edges.push_back({u, v});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

KnapsackItems random_items(int count, Weight max_size, Value max_profit, Rng& rng) {
  if (count < 1) throw Error(ErrorCode::BadArgument, "need at least one item");
  KnapsackItems items;
  Weight total_size = 0;
  Value total_profit = 0;
  for (int i = 0; i < count; ++i) {
    items.size.push_back(rng.uniform(0, max_size));
    items.profit.push_back(rng.uniform(0, max_profit));
    total_size += items.size.back();
    total_profit += items.profit.back();
  }
  items.capacity = rng.uniform(0, total_size);
  items.target = rng.uniform(0, total_profit);
  return items;
}

}  // namespace gk
