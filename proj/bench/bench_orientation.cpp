// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "tempoflow/generators.hpp"
#include "tempoflow/orientation.hpp"
#include "tempoflow/temporal.hpp"

namespace tf = tempoflow;

namespace {

tf::SearchOptions opts(bool parallel) {
  tf::SearchOptions o;
  o.parallel = parallel;
  return o;
}

void BM_FlowBruteForce(benchmark::State& state) {
  const auto net = tf::gen_flow_price_lb(8, tf::Rational(1, 4), 1);
  const auto space = tf::EnumerationSpace::all_edges(net);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tf::best_flow_orientation(net, *net.horizon(), space, opts(parallel)).value);
  }
}
BENCHMARK(BM_FlowBruteForce)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_QuickestBruteForce(benchmark::State& state) {
  const auto net = tf::gen_time_price_single_sink(2, 2);
  const auto space = tf::EnumerationSpace::all_edges(net);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(tf::best_quickest_orientation(net, space, opts(parallel)).time);
  }
}
BENCHMARK(BM_QuickestBruteForce)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

void BM_Pattern(benchmark::State& state) {
  const auto net = tf::gen_eaf(36, 4);
  const bool parallel = state.range(0) != 0;
  for (auto _ : state) {
    if (parallel) {
      benchmark::DoNotOptimize(tf::earliest_arrival_pattern(net, 24).values.size());
    } else {
      benchmark::DoNotOptimize(tf::earliest_arrival_pattern_serial(net, 24).values.size());
    }
  }
}
BENCHMARK(BM_Pattern)->Arg(0)->Arg(1)->ArgNames({"parallel"})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
