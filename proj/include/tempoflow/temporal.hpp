#pragma once

#include <optional>
#include <vector>

#include "tempoflow/flow_over_time.hpp"
#include "tempoflow/network.hpp"
#include "tempoflow/static_flow.hpp"
#include "tempoflow/time_expanded.hpp"

namespace tempoflow {

struct MaxFlowOverTimeResult {
  Rational value;
  FlowOverTime witness;
  // Network the witness lives on: the input itself, or its gadget transform
  // for undirected input.
  DirectedNetwork network;
};

MaxFlowOverTimeResult max_flow_over_time(const DirectedNetwork& network, Time T);
MaxFlowOverTimeResult max_flow_over_time(const UndirectedNetwork& network, Time T);
Rational max_flow_over_time_value(const DirectedNetwork& network, Time T);
Rational max_flow_over_time_value(const UndirectedNetwork& network, Time T);

// Sends x_P along P during [0, T - tau_P).
struct TemporallyRepeatedFlow {
  PathDecomposition decomposition;
  Time horizon = 0;

  Rational value() const;
  FlowOverTime to_flow_over_time(const DirectedNetwork& network) const;
};

// Paths with tau_P == T carry nothing over time and are dropped.
// Throws PreconditionError if some path has tau_P > T.
TemporallyRepeatedFlow temporally_repeated_from_static(const StaticFlow& x, const DirectedNetwork& network,
                                                       NodeId source, NodeId sink, Time T);

// T* is the infimum horizon at which all supplies reach the sinks.
// ceil_infimum = ceil(T*), the smallest integer n whose right limit
// value(n+) equals B. integral_horizon is the smallest integer horizon with
// value = B; it lies in {ceil_infimum, ceil_infimum + 1}. Both are empty when
// the supplies can never be routed.
struct QuickestTime {
  std::optional<Time> ceil_infimum;
  std::optional<Time> integral_horizon;

  bool feasible() const { return ceil_infimum.has_value(); }
};

QuickestTime quickest_transshipment_time(const DirectedNetwork& network);
QuickestTime quickest_transshipment_time(const UndirectedNetwork& network);

// Same search on a pre-scaled network. If `at_most` is given and
// ceil(T*) > *at_most, returns an infeasible result without refining.
QuickestTime quickest_time_scaled(const ScaledNetwork& network, std::optional<Time> at_most = std::nullopt,
                                  bool want_integral = true);
// True iff supplies can be routed given unlimited time.
bool routable_eventually(const ScaledNetwork& network);

// p(theta) for theta = 0..T_max.
struct EarliestArrivalPattern {
  std::vector<Rational> values;

  Time max_time() const { return static_cast<Time>(values.size()) - 1; }
  friend bool operator==(const EarliestArrivalPattern&, const EarliestArrivalPattern&) = default;
};

// jobs <= 0 uses the OpenMP default. Parallel over horizons.
EarliestArrivalPattern earliest_arrival_pattern(const DirectedNetwork& network, Time T_max, int jobs = 0);
EarliestArrivalPattern earliest_arrival_pattern(const UndirectedNetwork& network, Time T_max, int jobs = 0);
// Single-threaded reference implementation.
EarliestArrivalPattern earliest_arrival_pattern_serial(const DirectedNetwork& network, Time T_max);
EarliestArrivalPattern earliest_arrival_pattern_serial(const UndirectedNetwork& network, Time T_max);

}  // namespace tempoflow
