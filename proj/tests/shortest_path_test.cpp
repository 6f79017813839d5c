#include <gtest/gtest.h>

#include "gk/generators.hpp"
#include "gk/oracles.hpp"
#include "gk/shortest_path_solver.hpp"
#include "gk/verify.hpp"
#include "support.hpp"

using namespace gk;
using gk::test::make_instance;

namespace {

ParetoSet set_of(std::vector<ParetoPair> pairs, Weight cap = 100) { return ParetoSet::from_pairs(std::move(pairs), cap); }

Instance diamond(Cost xa_cost) {
  Instance inst = make_instance(Variant::ShortestPath, 4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {0, 2, 1, 0},
                                {0, 5, 1, 0}, 2, {}, 0, 3);
  inst.edges[0].cost = xa_cost;
  return inst;
}

}  // namespace

TEST(ShortestPath, DiamondEqualCosts) {
  const SolveReport r = solve_shortest_path(diamond(1));
  EXPECT_EQ(r.frontier, set_of({{1, 1}, {2, 5}}));
  EXPECT_EQ(r.best_value, 5);
  EXPECT_EQ(*r.witness, (std::vector<Vertex>{0, 1, 3}));
  EXPECT_EQ(r.frontier, enumerate_shortest_paths_opt(diamond(1)));
}

TEST(ShortestPath, DiamondLongerBranch) {
  const SolveReport r = solve_shortest_path(diamond(2));
  EXPECT_EQ(r.frontier, set_of({{1, 1}}));
  EXPECT_EQ(*r.witness, (std::vector<Vertex>{0, 2, 3}));
}

TEST(ShortestPath, SingleEdge) {
  Instance inst = make_instance(Variant::ShortestPath, 2, {{0, 1}}, {2, 3}, {4, 5}, 5, {}, 0, 1);
  inst.edges[0].cost = 3;
  EXPECT_EQ(solve_shortest_path(inst).frontier, set_of({{5, 9}}));
  inst.s = 4;
  EXPECT_TRUE(solve_shortest_path(inst).frontier.empty());
}

TEST(ShortestPath, Unreachable) {
  const Instance inst = make_instance(Variant::ShortestPath, 3, {{0, 1}}, {0, 0, 0}, {0, 0, 0}, 5, {}, 0, 2);
  const SolveReport r = solve_shortest_path(inst);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.frontier.empty());
  EXPECT_TRUE(r.stats.unreachable);
  EXPECT_THROW(enumerate_shortest_paths_opt(inst), Error);
}

TEST(ShortestPath, RejectsOtherVariants) {
  const Instance p = make_instance(Variant::Path, 2, {{0, 1}}, {0, 0}, {0, 0}, 0, {}, 0, 1);
  EXPECT_THROW(solve_shortest_path(p), Error);
}

TEST(ShortestPathProperty, MatchesOracleAndDijkstra) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    RandomSpec spec;
    spec.variant = Variant::ShortestPath;
    spec.family = static_cast<GraphFamily>(seed % 3);
    spec.n = 1 + static_cast<int>(seed % 12);
    spec.max_cost = 5;
    spec.p = 0.4;
    const Instance inst = random_instance(spec, seed);
    const LabelSearchResult r = shortest_path_labels(inst);
    const auto dist = shortest_distances(Graph(inst), *inst.x);
    for (Vertex v = 0; v < inst.n; ++v) EXPECT_EQ(r.state[v].distance, dist[v]) << "seed " << seed;
    if (!dist[*inst.y]) {
      EXPECT_TRUE(r.report.stats.unreachable);
      continue;
    }
    EXPECT_EQ(r.report.frontier, enumerate_shortest_paths_opt(inst)) << "seed " << seed;
    if (r.report.witness) EXPECT_TRUE(verify_solution(inst, *r.report.witness).ok);
  }
}

TEST(ShortestPathProperty, SettledLabelsAreFinal) {
  // After every settle step, each settled vertex holds the frontier over its
  // shortest paths; checked against the oracle run with that vertex as y.
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    RandomSpec spec;
    spec.variant = Variant::ShortestPath;
    spec.n = 7;
    spec.max_cost = 3;
    spec.p = 0.45;
    const Instance inst = random_instance(spec, seed);
    int steps = 0;
    shortest_path_labels(inst, [&](const std::vector<LabelState>& state, Vertex) {
      ++steps;
      for (Vertex v = 0; v < inst.n; ++v) {
        if (!state[v].settled) continue;
        EXPECT_TRUE(state[v].frontier.is_canonical());
        Instance probe = inst;
        probe.y = v;
        EXPECT_EQ(state[v].frontier, enumerate_shortest_paths_opt(probe)) << "seed " << seed << " v " << v;
      }
    });
    EXPECT_GE(steps, 1);
  }
}
