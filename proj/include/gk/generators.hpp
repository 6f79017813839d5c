#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gk/core.hpp"
#include "gk/oracles.hpp"
#include "gk/random.hpp"

namespace gk {

enum class GraphFamily { Tree, Gnp, Grid };

std::string to_string(GraphFamily family);
GraphFamily family_from_string(const std::string& name);

struct RandomSpec {
  Variant variant = Variant::Connected;
  GraphFamily family = GraphFamily::Gnp;
  int n = 6;
  double p = 0.3;  // Gnp edge probability
  Weight max_weight = 8;
  Value max_value = 8;
  Cost max_cost = 1;  // shortest_path only
  std::optional<Weight> s;  // drawn from [0, max_s] when absent
  Weight max_s = 20;
  std::optional<Value> d;
};

/// Deterministic for a fixed (spec, seed). Throws BadArgument on bad sizes.
Instance random_instance(const RandomSpec& spec, std::uint64_t seed);

/// G(n, p) conditioned on a degree cap: candidate edges are visited in a
/// random order and skipped once an endpoint is full.
SimpleGraph random_source_graph(int n, double p, int max_degree, Rng& rng);

KnapsackItems random_items(int count, Weight max_size, Value max_profit, Rng& rng);

}  // namespace gk
