#include "tempoflow/flow_over_time.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "tempoflow/errors.hpp"

namespace tempoflow {

void FlowOverTime::add(EdgeId e, Time from, Time to, const Rational& rate) {
  if (from >= to || rate == 0) return;
  auto& segs = segments_.at(e);
  // Rebuild over the breakpoint grid; segment lists are short.
  std::map<Time, Rational> delta;
  for (const auto& s : segs) {
    delta[s.from] += s.rate;
    delta[s.to] -= s.rate;
  }
  delta[from] += rate;
  delta[to] -= rate;
  std::vector<RateSegment> out;
  Rational current = 0;
  Time start = 0;
  for (const auto& [t, d] : delta) {
    if (current != 0 && t > start) {
      if (!out.empty() && out.back().to == start && out.back().rate == current) {
        out.back().to = t;
      } else {
        out.push_back({start, t, current});
      }
    }
    current += d;
    start = t;
  }
  segs = std::move(out);
}

Rational FlowOverTime::rate(EdgeId e, Time theta) const {
  for (const auto& s : segments_.at(e)) {
    if (s.from <= theta && theta < s.to) return s.rate;
  }
  return 0;
}

Rational FlowOverTime::cumulative(EdgeId e, const Rational& theta) const {
  Rational total = 0;
  for (const auto& s : segments_.at(e)) {
    if (theta <= s.from) break;
    const Rational end = theta < s.to ? theta : Rational(s.to);
    total += s.rate * (end - s.from);
  }
  return total;
}

bool FlowOverTime::empty() const {
  return std::all_of(segments_.begin(), segments_.end(), [](const auto& s) { return s.empty(); });
}

namespace {

void require_in_range(const FlowOverTime& f, const Rational& theta) {
  if (theta < 0 || theta > f.horizon()) {
    throw PreconditionError("theta " + to_string(theta) + " outside [0, " + std::to_string(f.horizon()) + "]");
  }
}

void require_shape(const FlowOverTime& f, const DirectedNetwork& network) {
  if (f.edge_count() != network.edge_count()) {
    throw PreconditionError("flow covers " + std::to_string(f.edge_count()) + " edges, network has " +
                            std::to_string(network.edge_count()));
  }
}

Rational excess_unchecked(const FlowOverTime& f, const DirectedNetwork& network, NodeId v,
                          const Rational& theta) {
  Rational ex = 0;
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    if (edge.head == v) {
      const Rational arrive_by = theta - edge.transit;
      if (arrive_by > 0) ex += f.cumulative(e, arrive_by);
    }
    if (edge.tail == v) ex -= f.cumulative(e, theta);
  }
  return ex;
}

}  // namespace

Rational excess(const FlowOverTime& f, const DirectedNetwork& network, NodeId v, const Rational& theta) {
  require_shape(f, network);
  require_in_range(f, theta);
  if (v < 0 || v >= network.node_count()) throw PreconditionError("node id out of range");
  return excess_unchecked(f, network, v, theta);
}

Rational flow_value_at(const FlowOverTime& f, const DirectedNetwork& network, const Rational& theta) {
  require_shape(f, network);
  require_in_range(f, theta);
  Rational value = 0;
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (network.is_sink(v)) value += excess_unchecked(f, network, v, theta);
  }
  return value;
}

Rational flow_value(const FlowOverTime& f, const DirectedNetwork& network) {
  return flow_value_at(f, network, Rational(f.horizon()));
}

std::vector<Rational> arrival_curve(const FlowOverTime& f, const DirectedNetwork& network) {
  std::vector<Rational> out;
  for (Time theta = 0; theta <= f.horizon(); ++theta) out.push_back(flow_value_at(f, network, Rational(theta)));
  return out;
}

std::vector<std::string> check_feasibility(const FlowOverTime& f, const DirectedNetwork& network) {
  std::vector<std::string> report;
  if (f.edge_count() != network.edge_count()) {
    report.push_back("flow/network edge count mismatch");
    return report;
  }
  const Time T = f.horizon();
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    for (const auto& s : f.segments(e)) {
      std::ostringstream where;
      where << "edge " << e << " [" << s.from << "," << s.to << "): ";
      if (s.rate < 0) report.push_back(where.str() + "negative rate");
      if (edge.capacity.is_finite() && s.rate > edge.capacity.value()) {
        report.push_back(where.str() + "rate " + to_string(s.rate) + " exceeds capacity");
      }
      if (s.from < 0 || s.to > T - edge.transit) {
        report.push_back(where.str() + "flow outside [0, T - tau_e)");
      }
    }
  }
  // Per-node excess on the integer grid, built incrementally.
  const NodeId n = network.node_count();
  std::vector<std::vector<Rational>> ex(n, std::vector<Rational>(T + 1));
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    for (Time theta = 0; theta <= T; ++theta) {
      const Rational out = f.cumulative(e, Rational(theta));
      ex[edge.tail][theta] -= out;
      if (theta + edge.transit <= T) ex[edge.head][theta + edge.transit] += out;
    }
    // Arrivals after the horizon are already reported as tail violations.
  }
  for (NodeId v = 0; v < n; ++v) {
    const Rational& b = network.balance(v);
    for (Time theta = 0; theta <= T; ++theta) {
      // ex[v][theta] holds outflow up to theta and inflow that departed by
      // theta - tau; entries before tau are zero by construction.
      const Rational& x = ex[v][theta];
      std::ostringstream where;
      where << "node " << network.node_name(v) << " at " << theta << ": excess " << to_string(x);
      if (b == 0) {
        if (x < 0) report.push_back(where.str() + " < 0");
        if (theta == T && x != 0) report.push_back(where.str() + " != 0 at horizon");
      } else if (b > 0) {
        if (x > 0 || x < -b) report.push_back(where.str() + " outside [-b, 0]");
      } else {
        if (x < 0 || x > -b) report.push_back(where.str() + " outside [0, -b]");
      }
    }
  }
  return report;
}

}  // namespace tempoflow
