#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tempoflow/flow_over_time.hpp"
#include "tempoflow/network.hpp"

namespace tempoflow {

enum class TenArcKind { movement, holdover, supply, demand };

struct TenArc {
  int from = 0;
  int to = 0;
  Capacity capacity;
  TenArcKind kind = TenArcKind::movement;
  std::int32_t element = 0;  // edge id for movement arcs, node id otherwise
  Time layer = 0;
};

// Copies (v, theta), theta = 0..T-1, indexed layer-major as theta*n + v,
// followed by a super source and a super sink.
//
// Terminal pools: a source's holdover arcs carry at most b_v (its remaining
// supply plus received flow never exceeds b_v), a sink's carry at most |b_v|.
// Together with the hookups this encodes the excess bounds exactly.
struct TimeExpandedGraph {
  NodeId base_nodes = 0;
  Time layers = 0;
  int super_source = 0;
  int super_sink = 0;
  std::vector<TenArc> arcs;

  int node_count() const { return super_sink + 1; }
  int node_index(NodeId v, Time theta) const { return static_cast<int>(theta * base_nodes + v); }
};

TimeExpandedGraph build_time_expanded(const DirectedNetwork& network, Time T);

// Capacities and balances scaled by the lcm of all denominators. Infinite
// capacities are flagged. Arc order follows the source network's edge ids.
class ScaledNetwork {
 public:
  struct Arc {
    NodeId tail;
    NodeId head;
    Time transit;
    bool infinite;
    BigInt capacity;  // scaled; meaningless when infinite
  };

  static ScaledNetwork from(const DirectedNetwork& network);
  // Arcs follow the declared endpoint order of each edge.
  static ScaledNetwork from_declared(const UndirectedNetwork& network);

  // Copy with the arcs whose bit is set in mask reversed.
  ScaledNetwork flipped(std::uint64_t mask) const;
  void flip(EdgeId e) { std::swap(arcs_[e].tail, arcs_[e].head); }

  NodeId node_count() const { return nodes_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<BigInt>& balances() const { return balances_; }
  const BigInt& scale() const { return scale_; }
  const BigInt& scaled_supply() const { return supply_; }

 private:
  template <class Net>
  static ScaledNetwork build(const Net& network);

  NodeId nodes_ = 0;
  std::vector<Arc> arcs_;
  std::vector<BigInt> balances_;
  BigInt scale_ = 1;
  BigInt supply_ = 0;
};

// Maximum value of a flow over time with horizon T.
Rational time_expanded_value(const ScaledNetwork& network, Time T);

// Right limit lim_{eps->0+} of the maximum value at horizon T + eps. Built on
// alternating thin/thick layers; thin layers stand for the vanishing slice
// after each integer and only carry infinite-capacity arcs.
Rational time_expanded_right_limit_value(const ScaledNetwork& network, Time T);

// Maximum value plus a witness that also drains every source's remaining
// supply pool, so the witness meets the source excess bounds.
std::pair<Rational, FlowOverTime> time_expanded_max_flow(const DirectedNetwork& network, Time T);

}  // namespace tempoflow
