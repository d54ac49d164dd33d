#include "tempoflow/temporal.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

#include "tempoflow/errors.hpp"
#include "tempoflow/max_flow.hpp"
#include "tempoflow/parallel.hpp"

namespace tempoflow {

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TEMPOFLOW_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return omp_get_max_threads();
}

MaxFlowOverTimeResult max_flow_over_time(const DirectedNetwork& network, Time T) {
  auto [value, witness] = time_expanded_max_flow(network, T);
  return {std::move(value), std::move(witness), network};
}

MaxFlowOverTimeResult max_flow_over_time(const UndirectedNetwork& network, Time T) {
  require_valid(network);
  return max_flow_over_time(gadget_transform(network), T);
}

Rational max_flow_over_time_value(const DirectedNetwork& network, Time T) {
  require_valid(network);
  return time_expanded_value(ScaledNetwork::from(network), T);
}

Rational max_flow_over_time_value(const UndirectedNetwork& network, Time T) {
  require_valid(network);
  return time_expanded_value(ScaledNetwork::from(gadget_transform(network)), T);
}

Rational TemporallyRepeatedFlow::value() const {
  Rational v = 0;
  for (const auto& p : decomposition.paths) v += p.rate * (horizon - p.transit);
  return v;
}

FlowOverTime TemporallyRepeatedFlow::to_flow_over_time(const DirectedNetwork& network) const {
  FlowOverTime f(horizon, network.edge_count());
  for (const auto& p : decomposition.paths) {
    Time offset = 0;
    for (EdgeId e : p.edges) {
      f.add(e, offset, offset + horizon - p.transit, p.rate);
      offset += network.edge(e).transit;
    }
  }
  return f;
}

TemporallyRepeatedFlow temporally_repeated_from_static(const StaticFlow& x, const DirectedNetwork& network,
                                                       NodeId source, NodeId sink, Time T) {
  PathDecomposition d = path_decomposition(x, network, source, sink);
  TemporallyRepeatedFlow trf;
  trf.horizon = T;
  for (auto& p : d.paths) {
    if (p.transit > T) {
      throw PreconditionError("decomposition path with transit " + std::to_string(p.transit) +
                              " exceeds horizon " + std::to_string(T));
    }
    if (p.transit < T) trf.decomposition.paths.push_back(std::move(p));
  }
  trf.decomposition.cycles = std::move(d.cycles);
  return trf;
}

bool routable_eventually(const ScaledNetwork& net) {
  if (net.scaled_supply() == 0) return true;
  const NodeId n = net.node_count();
  Dinic<BigInt> dinic(n + 2);
  const int s = n;
  const int t = n + 1;
  for (const auto& a : net.arcs()) {
    if (a.infinite || a.capacity > 0) dinic.add_arc(a.tail, a.head, net.scaled_supply());
  }
  for (NodeId v = 0; v < n; ++v) {
    const BigInt& b = net.balances()[v];
    if (b > 0) dinic.add_arc(s, v, b);
    if (b < 0) dinic.add_arc(v, t, BigInt(-b));
  }
  return dinic.max_flow(s, t) == net.scaled_supply();
}

QuickestTime quickest_time_scaled(const ScaledNetwork& net, std::optional<Time> at_most, bool want_integral) {
  QuickestTime result;
  const Rational B = Rational(net.scaled_supply()) / Rational(net.scale());
  if (B == 0) {
    result.ceil_infimum = 0;
    result.integral_horizon = 0;
    return result;
  }
  auto done_by = [&](Time n) { return time_expanded_right_limit_value(net, n) == B; };
  Time lo = -1;  // done_by(lo) is false (lo = -1 as sentinel)
  Time hi = 0;
  if (at_most) {
    if (!done_by(*at_most)) return result;
    hi = *at_most;
  } else {
    if (!routable_eventually(net)) return result;
    while (!done_by(hi)) {
      lo = hi;
      hi = hi == 0 ? 1 : 2 * hi;
    }
  }
  while (hi - lo > 1) {
    const Time mid = lo + (hi - lo) / 2;
    if (done_by(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  result.ceil_infimum = hi;
  if (want_integral) {
    result.integral_horizon = time_expanded_value(net, hi) == B ? hi : hi + 1;
  }
  return result;
}

QuickestTime quickest_transshipment_time(const DirectedNetwork& network) {
  require_valid(network);
  return quickest_time_scaled(ScaledNetwork::from(network));
}

QuickestTime quickest_transshipment_time(const UndirectedNetwork& network) {
  require_valid(network);
  return quickest_time_scaled(ScaledNetwork::from(gadget_transform(network)));
}

namespace {

EarliestArrivalPattern pattern_impl(const ScaledNetwork& net, Time T_max, int jobs, bool parallel) {
  if (T_max < 0) throw PreconditionError("negative T_max");
  EarliestArrivalPattern p;
  p.values.resize(T_max + 1);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (Time theta = 0; theta <= T_max; ++theta) p.values[theta] = time_expanded_value(net, theta);
  } else {
    for (Time theta = 0; theta <= T_max; ++theta) p.values[theta] = time_expanded_value(net, theta);
  }
  return p;
}

}  // namespace

EarliestArrivalPattern earliest_arrival_pattern(const DirectedNetwork& network, Time T_max, int jobs) {
  require_valid(network);
  return pattern_impl(ScaledNetwork::from(network), T_max, resolve_jobs(jobs), true);
}

EarliestArrivalPattern earliest_arrival_pattern(const UndirectedNetwork& network, Time T_max, int jobs) {
  require_valid(network);
  return pattern_impl(ScaledNetwork::from(gadget_transform(network)), T_max, resolve_jobs(jobs), true);
}

EarliestArrivalPattern earliest_arrival_pattern_serial(const DirectedNetwork& network, Time T_max) {
  require_valid(network);
  return pattern_impl(ScaledNetwork::from(network), T_max, 1, false);
}

EarliestArrivalPattern earliest_arrival_pattern_serial(const UndirectedNetwork& network, Time T_max) {
  require_valid(network);
  return pattern_impl(ScaledNetwork::from(gadget_transform(network)), T_max, 1, false);
}

}  // namespace tempoflow
