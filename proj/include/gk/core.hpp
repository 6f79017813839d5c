#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gk {

using Vertex = std::int32_t;
using Weight = std::int64_t;
using Value = std::int64_t;
using Cost = std::int64_t;

enum class Variant { Connected, Path, ShortestPath };

std::string_view to_string(Variant v);
Variant variant_from_string(std::string_view s);

enum class ErrorCode {
  DuplicateEdge,
  SelfLoop,
  IdOutOfRange,
  ZeroEdgeCost,
  MissingTerminal,
  BadField,
  NegativeCombined,
  PinnedTooLarge,
  EdgeNeverIntroduced,
  EdgeIntroducedTwice,
  BrokenSubtreeConnectivity,
  BadNodeArity,
  RootNotPinnedBag,
  BadBagTransition,
  NotATree,
  NoPath,
  Unreachable,
  BadEpsilon,
  TooLarge,
  VariantMismatch,
  BadArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Cost cost = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A vertex-weighted, vertex-valued undirected graph together with the
/// knapsack budget and the variant-specific data. `d` absent means the
/// instance is posed as an optimization problem.
struct Instance {
  Variant variant = Variant::Connected;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<Weight> weight;
  std::vector<Value> value;
  Weight s = 0;
  std::optional<Value> d;
  std::optional<Vertex> x;
  std::optional<Vertex> y;

  Weight total_weight(const std::vector<Vertex>& set) const;
  Value total_value(const std::vector<Vertex>& set) const;
  Value value_sum() const;
};

/// Checks every structural invariant and returns a copy whose edges are
/// stored with u < v in lexicographic order. Throws gk::Error.
Instance validate_instance(Instance raw);

struct Neighbor {
  Vertex to;
  Cost cost;
};

/// Adjacency-list view of an instance. Neighbor lists are sorted by id.
class Graph {
 public:
  explicit Graph(const Instance& inst);
  Graph(int n, const std::vector<Edge>& edges);

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<Neighbor>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex a, Vertex b) const;
  std::optional<Cost> edge_cost(Vertex a, Vertex b) const;

  /// True when the graph has no cycle.
  bool is_forest() const;

 private:
  std::vector<std::vector<Neighbor>> adj_;
};

/// Plain single-criterion Dijkstra; unreachable vertices map to nullopt.
std::vector<std::optional<Cost>> shortest_distances(const Graph& g, Vertex source);

}  // namespace gk
