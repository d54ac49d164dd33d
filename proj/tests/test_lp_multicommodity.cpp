#include <gtest/gtest.h>

#include "support.hpp"
#include "tempoflow/errors.hpp"
#include "tempoflow/lp.hpp"
#include "tempoflow/multicommodity.hpp"

using namespace tempoflow;
using Sense = LinearProgram::Sense;

TEST(Lp, SmallOptimum) {
  // max 3x + 2y, x + y <= 4, x + 3y <= 6, x <= 3.
  LinearProgram lp;
  const int x = lp.add_variable(3);
  const int y = lp.add_variable(2);
  lp.add_row({{x, 1}, {y, 1}}, Sense::le, 4);
  lp.add_row({{x, 1}, {y, 3}}, Sense::le, 6);
  lp.add_row({{x, 1}}, Sense::le, 3);
  const auto r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, 11);
  EXPECT_EQ(r.x[x], 3);
  EXPECT_EQ(r.x[y], 1);
}

TEST(Lp, FractionalAndEquality) {
  LinearProgram lp;
  const int x = lp.add_variable(1);
  const int y = lp.add_variable(1);
  lp.add_row({{x, 3}, {y, 1}}, Sense::eq, 2);
  lp.add_row({{x, 1}, {y, 3}}, Sense::le, 2);
  const auto r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.x[x], Rational(1, 2));
}

TEST(Lp, InfeasibleAndUnbounded) {
  LinearProgram a;
  const int x = a.add_variable(1);
  a.add_row({{x, 1}}, Sense::ge, 3);
  a.add_row({{x, 1}}, Sense::le, 2);
  EXPECT_EQ(solve(a).status, LpStatus::infeasible);
  LinearProgram b;
  const int y = b.add_variable(1);
  b.add_row({{y, 1}}, Sense::ge, 1);
  EXPECT_EQ(solve(b).status, LpStatus::unbounded);
}

TEST(Lp, RedundantEqualities) {
  LinearProgram lp;
  const int x = lp.add_variable(-1);
  const int y = lp.add_variable(-1);
  lp.add_row({{x, 1}, {y, 1}}, Sense::eq, 2);
  lp.add_row({{x, 2}, {y, 2}}, Sense::eq, 4);
  lp.add_row({{x, 1}}, Sense::ge, Rational(1, 2));
  const auto r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::optimal);
  EXPECT_EQ(r.value, -2);
}

// Brute force on tiny 2-variable LPs: optimum sits on a vertex of the box
// intersected with one row, so scan a fine rational grid.
TEST(Lp, RandomTwoVariableAgainstGrid) {
  tftest::Rng rng(47);
  for (int round = 0; round < 60; ++round) {
    LinearProgram lp;
    const int x = lp.add_variable(tftest::uniform(rng, -3, 3));
    const int y = lp.add_variable(tftest::uniform(rng, -3, 3));
    lp.add_row({{x, 1}}, Sense::le, 4);
    lp.add_row({{y, 1}}, Sense::le, 4);
    const int a = tftest::uniform(rng, 0, 3);
    const int b = tftest::uniform(rng, 0, 3);
    const int c = tftest::uniform(rng, 0, 8);
    lp.add_row({{x, a}, {y, b}}, Sense::le, c);
    const auto r = solve(lp);
    ASSERT_EQ(r.status, LpStatus::optimal);
    Rational best = 0;
    for (int i = 0; i <= 48; ++i) {
      for (int j = 0; j <= 48; ++j) {
        const Rational px(i, 12), py(j, 12);
        if (a * px + b * py > c) continue;
        best = std::max(best, Rational(lp.objective()[x] * px + lp.objective()[y] * py));
      }
    }
    EXPECT_GE(r.value, best);
    EXPECT_LE(a * r.x[x] + b * r.x[y], c);
  }
}

namespace {

DirectedNetwork unit_edge_net(int nodes) {
  DirectedBuilder b;
  for (int v = 0; v < nodes; ++v) b.add_node("n" + std::to_string(v));
  return b.build();
}

}  // namespace

TEST(Multicommodity, SingleEdgeSingleCommodity) {
  DirectedBuilder b;
  b.add_node("s");
  b.add_node("t");
  b.add_edge(0, 1, 2, 0);
  CommoditySet cs;
  cs.commodities.push_back({0, {Rational(3, 2), Rational(-3, 2)}});
  EXPECT_TRUE(static_mc_feasibility(b.build(), cs, 1));
  EXPECT_EQ(max_concurrent_value(b.build(), cs), 1);
}

TEST(Multicommodity, SharedUnitEdge) {
  // Two commodities a->b and c->d, both forced through x->y of capacity 1.
  DirectedBuilder b;
  for (const char* n : {"a", "c", "x", "y", "b", "d"}) b.add_node(n);
  b.add_edge(0, 2, Capacity::infinite(), 0);
  b.add_edge(1, 2, Capacity::infinite(), 0);
  b.add_edge(2, 3, 1, 0);
  b.add_edge(3, 4, Capacity::infinite(), 0);
  b.add_edge(3, 5, Capacity::infinite(), 0);
  const auto net = b.build();
  CommoditySet cs;
  cs.commodities.push_back({0, {1, 0, 0, 0, -1, 0}});
  cs.commodities.push_back({1, {0, 1, 0, 0, 0, -1}});
  EXPECT_FALSE(static_mc_feasibility(net, cs, 1));
  EXPECT_TRUE(static_mc_feasibility(net, cs, Rational(1, 2)));
  EXPECT_EQ(max_concurrent_value(net, cs), Rational(1, 2));
  const auto q = quickest_multicommodity_time(net, cs);
  ASSERT_TRUE(q.time);
  EXPECT_EQ(*q.time, 2);
}

TEST(Multicommodity, MonotoneInLambda) {
  tftest::Rng rng(53);
  tftest::RandomShape shape{.max_nodes = 5, .max_edges = 8, .max_transit = 0, .max_capacity = 3};
  for (int round = 0; round < 25; ++round) {
    const auto net = tftest::random_st_directed(rng, shape, false, 0);
    const NodeId n = net.node_count();
    CommoditySet cs;
    for (int i = 0; i < 2; ++i) {
      std::vector<Rational> bal(n);
      const int s = tftest::uniform(rng, 0, n - 1);
      int t = tftest::uniform(rng, 0, n - 2);
      if (t >= s) ++t;
      bal[s] = tftest::uniform(rng, 1, 3);
      bal[t] = -bal[s];
      cs.commodities.push_back({i, bal});
    }
    const Rational lambda = max_concurrent_value(net, cs);
    EXPECT_TRUE(static_mc_feasibility(net, cs, lambda));
    EXPECT_TRUE(static_mc_feasibility(net, cs, lambda / 2));
    EXPECT_TRUE(static_mc_feasibility(net, cs, 0));
    if (lambda < 1) EXPECT_FALSE(static_mc_feasibility(net, cs, lambda + Rational(1, 100)));
  }
}

TEST(Multicommodity, Preconditions) {
  DirectedBuilder b;
  b.add_node("s");
  b.add_node("t");
  b.add_edge(0, 1, 2, 1);
  CommoditySet cs;
  cs.commodities.push_back({0, {1, -1}});
  EXPECT_THROW(max_concurrent_value(b.build(), cs), PreconditionError);
  CommoditySet bad;
  bad.commodities.push_back({0, {1, 0}});
  EXPECT_THROW(max_concurrent_value(unit_edge_net(2), bad), PreconditionError);
  EXPECT_THROW(static_mc_feasibility(unit_edge_net(2), cs, 2), PreconditionError);
}
