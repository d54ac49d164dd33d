// OpenMP kernels against their serial reference paths.

#include <gtest/gtest.h>

#include "support.hpp"
#include "tempoflow/generators.hpp"
#include "tempoflow/orientation.hpp"
#include "tempoflow/reductions.hpp"
#include "tempoflow/temporal.hpp"

using namespace tempoflow;

namespace {

SearchOptions with(bool parallel, int jobs) {
  SearchOptions o;
  o.parallel = parallel;
  o.jobs = jobs;
  return o;
}

}  // namespace

TEST(Parallel, FlowSearchAgrees) {
  for (const auto& net : {gen_fig1(4), gen_flow_price_lb(8, Rational(1, 4), 1)}) {
    const auto space = EnumerationSpace::all_edges(net);
    const auto ref = best_flow_orientation(net, *net.horizon(), space, with(false, 1));
    for (int jobs : {1, 2, 4}) {
      const auto par = best_flow_orientation(net, *net.horizon(), space, with(true, jobs));
      EXPECT_EQ(par.value, ref.value);
      EXPECT_EQ(par.mask, ref.mask);
      EXPECT_EQ(par.orientation, ref.orientation);
    }
  }
}

TEST(Parallel, QuickestSearchAgrees) {
  for (const auto& net : {gen_time_price_single_sink(2, 2), gen_unit_capacity_tree(2, 2)}) {
    const auto space = EnumerationSpace::all_edges(net);
    const auto ref = best_quickest_orientation(net, space, with(false, 1));
    for (int jobs : {2, 4}) {
      const auto par = best_quickest_orientation(net, space, with(true, jobs));
      EXPECT_EQ(par.time, ref.time);
      EXPECT_EQ(par.mask, ref.mask);
    }
  }
}

TEST(Parallel, RandomFlowSearchAgrees) {
  tftest::Rng rng(59);
  tftest::RandomShape shape{.max_nodes = 5, .max_edges = 7, .max_transit = 2, .max_capacity = 2};
  for (int round = 0; round < 15; ++round) {
    const auto net = tftest::random_multi_terminal(rng, shape, 2, 2);
    const auto space = EnumerationSpace::all_edges(net);
    const auto ref = best_flow_orientation(net, 4, space, with(false, 1));
    const auto par = best_flow_orientation(net, 4, space, with(true, 3));
    EXPECT_EQ(par.value, ref.value);
    EXPECT_EQ(par.mask, ref.mask);
  }
}

TEST(Parallel, PatternAgrees) {
  const auto net = gen_eaf(36, 4);
  const auto ref = earliest_arrival_pattern_serial(net, 16);
  for (int jobs : {1, 2, 5}) EXPECT_EQ(earliest_arrival_pattern(net, 16, jobs), ref);
  const auto d = apply_orientation(net, Orientation::from_mask(net, 4));
  EXPECT_EQ(earliest_arrival_pattern(d, 16, 3), earliest_arrival_pattern_serial(d, 16));
}

TEST(Parallel, EafExperimentAgrees) {
  const auto net = gen_eaf(36, 4);
  const auto ref = eaf_contraflow_experiment(net, 12, with(false, 1));
  const auto par = eaf_contraflow_experiment(net, 12, with(true, 4));
  ASSERT_EQ(ref.rows.size(), par.rows.size());
  for (std::size_t i = 0; i < ref.rows.size(); ++i) {
    EXPECT_EQ(ref.rows[i].arrivals, par.rows[i].arrivals);
    EXPECT_EQ(ref.rows[i].alpha.value, par.rows[i].alpha.value);
    EXPECT_EQ(ref.rows[i].beta, par.rows[i].beta);
  }
  EXPECT_EQ(ref.best_alpha_row, par.best_alpha_row);
  EXPECT_EQ(ref.best_beta_row, par.best_beta_row);
}

TEST(Parallel, ReductionSearchesAgree) {
  const auto f = parse_dimacs("p cnf 3 2\n1 2 -3 0\n-1 2 3 0\n");
  const auto conc = reduce_3sat_concurrent(f);
  const auto a = best_concurrent_orientation(conc, with(false, 1));
  const auto b = best_concurrent_orientation(conc, with(true, 3));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.mask, b.mask);
  const auto mc = reduce_3sat_mc_quickest(f, BigInt(2));
  const auto c = best_mc_quickest_orientation(mc, with(false, 1));
  const auto d = best_mc_quickest_orientation(mc, with(true, 3));
  EXPECT_EQ(c.time, d.time);
  EXPECT_EQ(c.mask, d.mask);
}
