#include <gtest/gtest.h>

#include "gk/connected_solver.hpp"
#include "gk/generators.hpp"
#include "gk/oracles.hpp"
#include "gk/verify.hpp"
#include "support.hpp"

using namespace gk;
using gk::test::make_instance;

namespace {

ParetoSet set_of(std::vector<ParetoPair> pairs, Weight cap = 100) { return ParetoSet::from_pairs(std::move(pairs), cap); }

}  // namespace

TEST(Connected, TriangleFrontier) {
  const Instance tri = make_instance(Variant::Connected, 3, {{0, 1}, {1, 2}, {0, 2}}, {1, 1, 1}, {1, 2, 3}, 2);
  const SolveReport r = solve_connected(tri);
  EXPECT_EQ(r.frontier, set_of({{0, 0}, {1, 3}, {2, 5}}));
  EXPECT_EQ(r.best_value, 5);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_solution(tri, *r.witness).ok);
}

TEST(Connected, PathNeedsMiddleVertex) {
  const Instance path = make_instance(Variant::Connected, 3, {{0, 1}, {1, 2}}, {1, 1, 1}, {3, 5, 3}, 3);
  const SolveReport r = solve_connected(path);
  EXPECT_EQ(r.best_value, 11);
  const Instance no_middle = make_instance(Variant::Connected, 3, {{0, 1}, {1, 2}}, {1, 9, 1}, {3, 5, 3}, 3);
  EXPECT_EQ(solve_connected(no_middle).best_value, 3);
}

TEST(Connected, DecisionMode) {
  const Instance star = make_instance(Variant::Connected, 3, {{0, 1}, {0, 2}}, {0, 2, 3}, {0, 3, 4}, 5, 7);
  const SolveReport yes = solve_connected(star);
  EXPECT_TRUE(yes.feasible);
  EXPECT_TRUE(verify_solution(star, *yes.witness).ok);
  const Instance no = make_instance(Variant::Connected, 3, {{0, 1}, {0, 2}}, {0, 2, 3}, {0, 3, 4}, 4, 7);
  EXPECT_FALSE(solve_connected(no).feasible);
  EXPECT_FALSE(solve_connected(no).witness);
}

TEST(Connected, EmptySetAlwaysAvailable) {
  const Instance heavy = make_instance(Variant::Connected, 2, {}, {5, 5}, {1, 1}, 0);
  const SolveReport r = solve_connected(heavy);
  EXPECT_EQ(r.frontier, set_of({{0, 0}}));
  EXPECT_TRUE(r.feasible);
}

TEST(Connected, EdgelessPairHasNoConnectedPair) {
  const Instance two = make_instance(Variant::Connected, 2, {}, {1, 1}, {2, 3}, 100);
  EXPECT_EQ(solve_connected(two).frontier, set_of({{0, 0}, {1, 3}}));
}

TEST(Connected, RejectsOtherVariants) {
  const Instance p = make_instance(Variant::Path, 2, {{0, 1}}, {0, 0}, {0, 0}, 0, {}, 0, 1);
  EXPECT_THROW(solve_connected(p), Error);
}

TEST(Connected, IdenticalPartitionJoinNeverBeatsFullJoin) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    RandomSpec spec;
    spec.n = 8;
    spec.p = 0.45;
    spec.s = 30;
    const Instance inst = random_instance(spec, seed);
    ConnectedOptions narrow;
    narrow.restricted_join = true;
    const SolveReport restricted = solve_connected(inst, narrow);
    const SolveReport full = solve_connected(inst);
    for (const ParetoPair& p : restricted.frontier) {
      const auto better = full.frontier.meets(p.a);
      ASSERT_TRUE(better);
      EXPECT_LE(full.frontier.pairs().front().w, p.w);
    }
    if (restricted.witness) EXPECT_TRUE(verify_solution(inst, *restricted.witness).ok);
  }
}

TEST(ConnectedProperty, MatchesOracle) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomSpec spec;
    spec.family = static_cast<GraphFamily>(seed % 3);
    spec.n = 1 + static_cast<int>(seed % 9);
    spec.p = seed % 2 ? 0.3 : 0.6;
    const Instance inst = random_instance(spec, seed);
    const SolveReport r = solve_connected(inst);
    EXPECT_EQ(r.frontier, enumerate_connected_subsets_opt(inst)) << "seed " << seed;
    EXPECT_TRUE(r.frontier.is_canonical());
    ASSERT_TRUE(r.witness);
    EXPECT_TRUE(verify_solution(inst, *r.witness).ok);
    EXPECT_LE(r.frontier.size(), static_cast<std::size_t>(std::min(inst.s, inst.value_sum()) + 1));
  }
}

TEST(ConnectedProperty, DecompositionSeedDoesNotChangeAnswer) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    RandomSpec spec;
    spec.n = 8;
    spec.p = 0.4;
    const Instance inst = random_instance(spec, seed);
    ConnectedOptions other;
    other.decomposition_seed = seed * 31;
    EXPECT_EQ(solve_connected(inst).frontier, solve_connected(inst, other).frontier);
  }
}
