#include <gtest/gtest.h>

#include "gk/connected_solver.hpp"
#include "gk/oracles.hpp"
#include "gk/path_solver.hpp"
#include "gk/reductions.hpp"
#include "gk/shortest_path_solver.hpp"

using namespace gk;

namespace {

const SimpleGraph kK3{3, {{0, 1}, {0, 2}, {1, 2}}};

bool yes(const Instance& inst) { return oracle_solve(inst).feasible; }

int max_degree(const Instance& inst) {
  std::vector<int> deg(inst.n, 0);
  for (const Edge& e : inst.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return inst.n ? *std::max_element(deg.begin(), deg.end()) : 0;
}

}  // namespace

TEST(VertexCoverGadget, Triangle) {
  const ReductionOutput two = reduce_vertex_cover_to_connected(kK3, 2);
  EXPECT_EQ(two.instance.n, 9);
  EXPECT_EQ(two.instance.s, 2);
  EXPECT_EQ(two.instance.d, 3);
  EXPECT_TRUE(yes(two.instance));
  EXPECT_TRUE(solve_connected(two.instance).feasible);
  EXPECT_FALSE(yes(reduce_vertex_cover_to_connected(kK3, 1).instance));
  EXPECT_LE(max_degree(two.instance), 4);
  EXPECT_EQ(two.provenance[6].role, VertexRole::H);
  EXPECT_EQ(two.provenance[6].index, 0);
}

TEST(VertexCoverGadget, Edgeless) {
  const ReductionOutput out = reduce_vertex_cover_to_connected(SimpleGraph{3, {}}, 0);
  EXPECT_EQ(out.instance.d, 0);
  EXPECT_TRUE(solve_connected(out.instance).feasible);
}

// Zero cover budget with one edge: the lone h vertex is a weight-0 solution,
// so the gadget answers yes although the source answers no.
TEST(VertexCoverGadget, ZeroBudgetLoneEdgeVertex) {
  const SimpleGraph one_edge{2, {{0, 1}}};
  EXPECT_FALSE(has_vertex_cover(one_edge, 0));
  EXPECT_TRUE(yes(reduce_vertex_cover_to_connected(one_edge, 0).instance));
  EXPECT_FALSE(has_partial_vertex_cover(one_edge, 0, 1));
  EXPECT_TRUE(yes(reduce_partial_vc_to_connected(one_edge, 0, 1).instance));
}

TEST(StarGadget, Examples) {
  EXPECT_TRUE(solve_connected(reduce_knapsack_to_star_connected({{2, 3}, {3, 4}, 5, 7}).instance).feasible);
  EXPECT_FALSE(solve_connected(reduce_knapsack_to_star_connected({{2, 3}, {3, 4}, 5, 8}).instance).feasible);
  EXPECT_FALSE(solve_connected(reduce_knapsack_to_star_connected({{1}, {1}, 0, 1}).instance).feasible);
  EXPECT_THROW(reduce_knapsack_to_star_connected({{}, {}, 0, 0}), Error);
}

TEST(PartialCoverGadget, Examples) {
  const ReductionOutput out = reduce_partial_vc_to_connected(kK3, 1, 2);
  EXPECT_EQ(out.instance.n, 7);
  EXPECT_TRUE(solve_connected(out.instance).feasible);
  EXPECT_FALSE(solve_connected(reduce_partial_vc_to_connected(kK3, 1, 3).instance).feasible);
  EXPECT_TRUE(solve_connected(reduce_partial_vc_to_connected(kK3, 0, 0).instance).feasible);
  EXPECT_THROW(reduce_partial_vc_to_connected(kK3, 1, 4), Error);
}

TEST(HamiltonianGadget, Examples) {
  EXPECT_TRUE(solve_path_treewidth(reduce_hamiltonian_to_path({3, {{0, 1}, {1, 2}}}, 0, 2).instance).feasible);
  EXPECT_FALSE(solve_path_treewidth(reduce_hamiltonian_to_path({4, {{0, 1}, {0, 2}, {0, 3}}}, 1, 2).instance).feasible);
  const SimpleGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 0; y < 4; ++y)
      if (x != y) EXPECT_TRUE(solve_path_treewidth(reduce_hamiltonian_to_path(k4, x, y).instance).feasible);
  EXPECT_THROW(reduce_hamiltonian_to_path(k4, 1, 1), Error);
}

TEST(LadderGadget, Structure) {
  const ReductionOutput out = reduce_knapsack_to_path_gadget({{2, 3}, {3, 4}, 5, 7}, Variant::Path);
  EXPECT_EQ(out.instance.n, 7);
  EXPECT_EQ(out.instance.edges.size(), 8u);
  EXPECT_EQ(out.instance.x, 0);
  EXPECT_EQ(out.instance.y, 2);
  const auto paths = enumerate_xy_paths(out.instance);
  EXPECT_EQ(paths.size(), 4u);
  for (const auto& p : paths) EXPECT_EQ(p.size(), 5u);
  ASSERT_TRUE(out.path_decomposition);
  EXPECT_EQ(out.path_decomposition->width(), 2);
  EXPECT_NO_THROW(validate_tree_decomposition(out.instance, *out.path_decomposition));
  EXPECT_TRUE(solve_path_treewidth(out.instance).feasible);
}

TEST(LadderGadget, ShortestPathVariant) {
  const ReductionOutput out = reduce_knapsack_to_path_gadget({{2, 3}, {3, 4}, 5, 7}, Variant::ShortestPath);
  for (const Edge& e : out.instance.edges) EXPECT_EQ(e.cost, 1);
  EXPECT_TRUE(solve_shortest_path(out.instance).feasible);
  EXPECT_FALSE(solve_shortest_path(reduce_knapsack_to_path_gadget({{2, 3}, {3, 4}, 5, 8}, Variant::ShortestPath).instance)
                   .feasible);
}

TEST(LadderGadget, AllPathsHaveTwoNEdges) {
  for (int n = 1; n <= 3; ++n) {
    KnapsackItems items{std::vector<Weight>(n, 1), std::vector<Value>(n, 1), 0, 0};
    const ReductionOutput out = reduce_knapsack_to_path_gadget(items, Variant::Path);
    const auto paths = enumerate_xy_paths(out.instance);
    EXPECT_EQ(paths.size(), std::size_t{1} << n);
    for (const auto& p : paths) EXPECT_EQ(p.size(), static_cast<std::size_t>(2 * n + 1));
  }
}
