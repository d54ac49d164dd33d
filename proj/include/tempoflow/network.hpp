#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tempoflow/rational.hpp"

namespace tempoflow {

using NodeId = std::int32_t;
using EdgeId = std::int32_t;
using Time = std::int64_t;

// For undirected networks (tail, head) is the declared endpoint order only.
struct Edge {
  NodeId tail = 0;
  NodeId head = 0;
  Capacity capacity;
  Time transit = 0;
};

enum class EdgeKind { undirected, directed };

// Immutable network over time. Node and edge ids are dense and follow
// insertion order; every deterministic tie-break in the library keys on them.
template <EdgeKind Kind>
class NetworkOverTime {
 public:
  static constexpr EdgeKind kind = Kind;

  NetworkOverTime() = default;
  NetworkOverTime(std::vector<std::string> node_names, std::vector<Edge> edges,
                  std::vector<Rational> balances, std::optional<Time> horizon)
      : names_(std::move(node_names)),
        edges_(std::move(edges)),
        balances_(std::move(balances)),
        horizon_(horizon) {
    balances_.resize(names_.size());
  }

  NodeId node_count() const { return static_cast<NodeId>(names_.size()); }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const std::string& node_name(NodeId v) const { return names_.at(v); }
  const std::vector<std::string>& node_names() const { return names_; }
  std::optional<NodeId> find_node(const std::string& name) const {
    for (NodeId v = 0; v < node_count(); ++v) {
      if (names_[v] == name) return v;
    }
    return std::nullopt;
  }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  const std::vector<Rational>& balances() const { return balances_; }
  const Rational& balance(NodeId v) const { return balances_.at(v); }
  bool is_source(NodeId v) const { return balances_[v] > 0; }
  bool is_sink(NodeId v) const { return balances_[v] < 0; }
  bool is_terminal(NodeId v) const { return balances_[v] != 0; }

  // B: total supply.
  Rational total_supply() const {
    Rational sum = 0;
    for (const auto& b : balances_) {
      if (b > 0) sum += b;
    }
    return sum;
  }
  std::vector<NodeId> sources() const { return select([&](NodeId v) { return is_source(v); }); }
  std::vector<NodeId> sinks() const { return select([&](NodeId v) { return is_sink(v); }); }

  const std::optional<Time>& horizon() const { return horizon_; }
  NetworkOverTime with_horizon(std::optional<Time> horizon) const {
    NetworkOverTime copy = *this;
    copy.horizon_ = horizon;
    return copy;
  }
  NetworkOverTime with_balances(std::vector<Rational> balances) const {
    NetworkOverTime copy = *this;
    copy.balances_ = std::move(balances);
    copy.balances_.resize(names_.size());
    return copy;
  }

 private:
  template <class Pred>
  std::vector<NodeId> select(Pred pred) const {
    std::vector<NodeId> out;
    for (NodeId v = 0; v < node_count(); ++v) {
      if (pred(v)) out.push_back(v);
    }
    return out;
  }

  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<Rational> balances_;
  std::optional<Time> horizon_;
};

using UndirectedNetwork = NetworkOverTime<EdgeKind::undirected>;
using DirectedNetwork = NetworkOverTime<EdgeKind::directed>;

template <EdgeKind Kind>
class NetworkBuilder {
 public:
  NodeId add_node(std::string name, Rational balance = 0) {
    names_.push_back(std::move(name));
    balances_.push_back(std::move(balance));
    return static_cast<NodeId>(names_.size() - 1);
  }
  EdgeId add_edge(NodeId tail, NodeId head, Capacity capacity, Time transit = 0) {
    edges_.push_back(Edge{tail, head, std::move(capacity), transit});
    return static_cast<EdgeId>(edges_.size() - 1);
  }
  void set_balance(NodeId v, Rational balance) { balances_.at(v) = std::move(balance); }
  void add_balance(NodeId v, const Rational& delta) { balances_.at(v) += delta; }
  void set_horizon(std::optional<Time> horizon) { horizon_ = horizon; }
  NodeId node_count() const { return static_cast<NodeId>(names_.size()); }

  NetworkOverTime<Kind> build() const { return {names_, edges_, balances_, horizon_}; }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<Rational> balances_;
  std::optional<Time> horizon_;
};

using UndirectedBuilder = NetworkBuilder<EdgeKind::undirected>;
using DirectedBuilder = NetworkBuilder<EdgeKind::directed>;

// Edge id -> ordered endpoint pair.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<std::pair<NodeId, NodeId>> arcs) : arcs_(std::move(arcs)) {}

  // Bit e of mask set means edge e is reversed relative to its declared order.
  static Orientation from_mask(const UndirectedNetwork& network, std::uint64_t mask);
  // Low node id -> high node id on every edge.
  static Orientation canonical(const UndirectedNetwork& network);

  EdgeId size() const { return static_cast<EdgeId>(arcs_.size()); }
  const std::pair<NodeId, NodeId>& arc(EdgeId e) const { return arcs_.at(e); }
  void set(EdgeId e, NodeId tail, NodeId head) { arcs_.at(e) = {tail, head}; }
  const std::vector<std::pair<NodeId, NodeId>>& arcs() const { return arcs_; }
  // Inverse of from_mask. Precondition: matches network.
  std::uint64_t to_mask(const UndirectedNetwork& network) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<std::pair<NodeId, NodeId>> arcs_;
};

struct Commodity {
  int id = 0;
  std::vector<Rational> balances;  // indexed by node id
};

struct CommoditySet {
  std::vector<Commodity> commodities;
};

std::vector<std::string> validate(const UndirectedNetwork& network);
std::vector<std::string> validate(const DirectedNetwork& network);
std::vector<std::string> validate(const CommoditySet& commodities, NodeId node_count);

// Throws PreconditionError listing every violation, if any.
void require_valid(const UndirectedNetwork& network);
void require_valid(const DirectedNetwork& network);

DirectedNetwork apply_orientation(const UndirectedNetwork& network, const Orientation& sigma);

// Every undirected edge e={v,w} becomes nodes vw, vw' (ids n+2e, n+2e+1) and
// arcs 5e..5e+4 = (v,vw), (w,vw), (vw,vw'), (vw',v), (vw',w).
DirectedNetwork gadget_transform(const UndirectedNetwork& network);
// Arc id of edge e's capacitated middle arc inside the gadget network.
inline EdgeId gadget_middle_arc(EdgeId e) { return 5 * e + 2; }

// Treat an undirected network as directed along its declared endpoint order.
DirectedNetwork as_declared_directed(const UndirectedNetwork& network);

}  // namespace tempoflow
