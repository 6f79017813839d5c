#include <gtest/gtest.h>

#include "gk/approximation.hpp"
#include "gk/connected_solver.hpp"
#include "gk/generators.hpp"
#include "gk/oracles.hpp"
#include "gk/path_solver.hpp"
#include "gk/shortest_path_solver.hpp"
#include "gk/verify.hpp"
#include "support.hpp"

using namespace gk;
using gk::test::make_instance;

namespace {

SolveReport connected_exact(const Instance& i) { return solve_connected(i); }
SolveReport path_exact(const Instance& i) { return solve_path_treewidth(i); }
SolveReport shortest_exact(const Instance& i) { return solve_shortest_path(i); }

}  // namespace

TEST(Epsilon, Parse) {
  EXPECT_EQ(Epsilon::parse("1/2").den, 2);
  EXPECT_EQ(Epsilon::parse("1").num, 1);
  EXPECT_EQ(Epsilon::parse("3/10").str(), "3/10");
  for (const char* bad : {"0", "0/3", "3/2", "-1/2", "a/b", "1/", "", "0.1"}) EXPECT_THROW(Epsilon::parse(bad), Error) << bad;
}

TEST(Scale, FormulaExample) {
  const Instance inst = make_instance(Variant::Connected, 3, {}, {0, 0, 0}, {10, 20, 40}, 0);
  const ScaledInstance s = scale_values(inst, Epsilon{1, 2});
  EXPECT_EQ(s.alpha_max, 40);
  EXPECT_EQ(s.scaled.value, (std::vector<Value>{1, 3, 6}));
  EXPECT_FALSE(s.zero_values);
}

TEST(Scale, EqualValuesCollapseToN) {
  const Instance inst = make_instance(Variant::Connected, 4, {}, {0, 0, 0, 0}, {7, 7, 7, 7}, 0);
  EXPECT_EQ(scale_values(inst, Epsilon{1, 1}).scaled.value, (std::vector<Value>{4, 4, 4, 4}));
}

TEST(Scale, ZeroValuesFlagged) {
  const Instance inst = make_instance(Variant::Connected, 2, {}, {0, 0}, {0, 0}, 0);
  const ScaledInstance s = scale_values(inst, Epsilon{1, 3});
  EXPECT_TRUE(s.zero_values);
  EXPECT_EQ(s.scaled.value, inst.value);
  EXPECT_THROW(scale_values(inst, Epsilon{2, 1}), Error);
}

TEST(Fptas, ConnectedPathExample) {
  const Instance inst = make_instance(Variant::Connected, 3, {{0, 1}, {1, 2}}, {1, 1, 1}, {3, 5, 3}, 3);
  const SolveReport r = fptas_optimize(inst, Epsilon{1, 10}, connected_exact);
  ASSERT_TRUE(r.witness);
  EXPECT_GE(*r.best_value, 10);
  EXPECT_TRUE(r.scaled_value);
  EXPECT_TRUE(verify_solution(inst, *r.witness).ok);
}

TEST(Fptas, VacuousEpsilonStillFeasible) {
  const Instance inst = make_instance(Variant::Connected, 3, {{0, 1}}, {1, 2, 1}, {1, 9, 2}, 2);
  const SolveReport r = fptas_optimize(inst, Epsilon{1, 1}, connected_exact);
  ASSERT_TRUE(r.witness);
  EXPECT_TRUE(verify_solution(inst, *r.witness).ok);
}

TEST(Fptas, ShortestPathKeepsDistances) {
  // The only shortest route crosses a vertex too heavy for the budget, so
  // no feasible answer exists even though a longer route fits.
  Instance inst = make_instance(Variant::ShortestPath, 5, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}},
                                {0, 9, 0, 0, 0}, {0, 1, 1, 1, 0}, 3, {}, 0, 4);
  const SolveReport r = fptas_optimize(inst, Epsilon{1, 2}, shortest_exact);
  EXPECT_FALSE(r.feasible);
  EXPECT_FALSE(r.witness);
}

TEST(Fptas, PathOutlierValueCannotDistortScale) {
  // Vertex 3 holds a huge value but is off every x-y path.
  const Instance inst = make_instance(Variant::Path, 4, {{0, 1}, {1, 2}, {0, 3}}, {0, 0, 0, 0}, {1, 2, 1, 1000}, 0,
                                      {}, 0, 2);
  ScaledInstance used;
  const SolveReport r = fptas_optimize(inst, Epsilon{1, 2}, path_exact, &used);
  EXPECT_EQ(r.best_value, 4);
  EXPECT_EQ(used.alpha_max, 2);
  EXPECT_EQ(used.scaled.value[3], 0);
}

TEST(FptasProperty, GuaranteeAgainstOracle) {
  const std::vector<Epsilon> eps{{1, 2}, {1, 4}, {1, 10}};
  for (std::uint64_t seed = 1; seed <= 30; ++seed)
    for (Variant variant : {Variant::Connected, Variant::Path, Variant::ShortestPath}) {
      RandomSpec spec;
      spec.variant = variant;
      spec.family = static_cast<GraphFamily>(seed % 3);
      spec.n = 2 + static_cast<int>(seed % 8);
      spec.p = 0.45;
      spec.max_value = 30;
      spec.max_cost = 3;
      const Instance inst = random_instance(spec, seed);
      const SolveReport opt = oracle_solve(inst);
      const ExactSolver exact = variant == Variant::Connected ? ExactSolver(connected_exact)
                                : variant == Variant::Path    ? ExactSolver(path_exact)
                                                              : ExactSolver(shortest_exact);
      for (const Epsilon& e : eps) {
        ScaledInstance used;
        const SolveReport r = fptas_optimize(inst, e, exact, &used);
        ASSERT_EQ(r.feasible, opt.feasible) << "seed " << seed;
        if (!opt.feasible) continue;
        EXPECT_TRUE(verify_solution(inst, *r.witness).ok);
        EXPECT_GE(e.den * *r.best_value, (e.den - e.num) * *opt.best_value) << "seed " << seed;
        Value sum = 0;
        for (Value v : used.scaled.value) sum += v;
        const Value n = used.scaled.n;
        EXPECT_LE(sum, (n * n * e.den + e.num - 1) / e.num) << "seed " << seed << " eps " << e.str() << " alpha_max " << used.alpha_max;
      }
    }
}
