#pragma once

#include <string>
#include <vector>

#include "tempoflow/network.hpp"

namespace tempoflow {

// Constant rate on [from, to).
struct RateSegment {
  Time from = 0;
  Time to = 0;
  Rational rate;

  friend bool operator==(const RateSegment&, const RateSegment&) = default;
};

// Piecewise-constant flow over time on a directed network. Segments per
// edge are sorted, disjoint and carry strictly positive rates.
class FlowOverTime {
 public:
  FlowOverTime() = default;
  FlowOverTime(Time horizon, EdgeId edge_count) : horizon_(horizon), segments_(edge_count) {}

  Time horizon() const { return horizon_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(segments_.size()); }
  const std::vector<RateSegment>& segments(EdgeId e) const { return segments_.at(e); }

  // Adds rate on [from, to) to edge e, keeping segments canonical.
  void add(EdgeId e, Time from, Time to, const Rational& rate);
  Rational rate(EdgeId e, Time theta) const;  // rate on [theta, theta+1)
  // Integral of f_e over [0, theta].
  Rational cumulative(EdgeId e, const Rational& theta) const;
  bool empty() const;

  friend bool operator==(const FlowOverTime&, const FlowOverTime&) = default;

 private:
  Time horizon_ = 0;
  std::vector<std::vector<RateSegment>> segments_;
};

// Throws PreconditionError when theta lies outside [0, T].
Rational excess(const FlowOverTime& f, const DirectedNetwork& network, NodeId v, const Rational& theta);
// |f|_theta: total excess over sinks.
Rational flow_value_at(const FlowOverTime& f, const DirectedNetwork& network, const Rational& theta);
Rational flow_value(const FlowOverTime& f, const DirectedNetwork& network);  // at the horizon

// Empty iff f respects capacities, the tail condition f_e(theta) = 0 for
// theta >= T - tau_e, and every excess constraint at every integer theta.
// Excess is linear between integer points, so the integer grid is exhaustive.
std::vector<std::string> check_feasibility(const FlowOverTime& f, const DirectedNetwork& network);

// |f|_theta for theta = 0..T.
std::vector<Rational> arrival_curve(const FlowOverTime& f, const DirectedNetwork& network);

}  // namespace tempoflow
