#include "tempoflow/time_expanded.hpp"

#include <climits>
#include <numeric>

#include "tempoflow/errors.hpp"
#include "tempoflow/max_flow.hpp"

namespace tempoflow {

namespace {

// Layer structure shared by the plain and the right-limit expansion.
struct Layout {
  Time layers = 0;
  bool right_limit = false;
  Time horizon = 0;

  static Layout plain(Time T) { return {T, false, T}; }
  static Layout limit(Time T) { return {2 * T + 1, true, T}; }

  bool thin(Time layer) const { return right_limit && layer % 2 == 0; }
  // Layer reached by an arc of transit tau from `layer`, or -1 when it would
  // arrive after the horizon.
  Time target(Time layer, Time tau) const {
    const Time t = layer + (right_limit ? 2 * tau : tau);
    return t < layers ? t : -1;
  }
};

// Emits the expansion arcs in layer-major, id-minor order. Callbacks:
//   movement(arc_id, from_layer, to_layer)
//   holdover(node, layer)
//   supply(node) / demand(node)
template <class ArcView, class Fn>
void emit_layout(NodeId n, const ArcView& arcs, const std::vector<int>& balance_sign, const Layout& layout,
                 Fn&& fn) {
  if (layout.layers == 0) return;
  for (NodeId v = 0; v < n; ++v) {
    if (balance_sign[v] > 0) fn.supply(v);
  }
  for (Time layer = 0; layer < layout.layers; ++layer) {
    const bool thin = layout.thin(layer);
    for (EdgeId e = 0; e < static_cast<EdgeId>(arcs.size()); ++e) {
      if (thin && !arcs[e].infinite) continue;
      const Time to = layout.target(layer, arcs[e].transit);
      if (to >= 0) fn.movement(e, layer, to);
    }
    if (layer + 1 < layout.layers) {
      for (NodeId v = 0; v < n; ++v) fn.holdover(v, layer);
    }
  }
  for (NodeId v = 0; v < n; ++v) {
    if (balance_sign[v] < 0) fn.demand(v);
  }
}

struct NetworkArcView {
  struct Item {
    Time transit;
    bool infinite;
  };
  std::vector<Item> items;
  std::size_t size() const { return items.size(); }
  const Item& operator[](std::size_t i) const { return items[i]; }
};

template <class Int>
Int narrow(const BigInt& x);

template <>
std::int64_t narrow<std::int64_t>(const BigInt& x) {
  return x.get_si();
}

template <>
BigInt narrow<BigInt>(const BigInt& x) {
  return x;
}

BigInt clamp_cap(const ScaledNetwork::Arc& arc, const BigInt& bound) {
  if (arc.infinite || arc.capacity > bound) return bound;
  return arc.capacity;
}

std::vector<int> signs(const std::vector<BigInt>& balances) {
  std::vector<int> out;
  for (const auto& b : balances) out.push_back(sgn(b));
  return out;
}

template <class Int>
struct Expansion {
  Dinic<Int> dinic;
  int source;
  int sink;
  // (edge id, layer, arc handle) for movement arcs of the plain expansion.
  std::vector<std::tuple<EdgeId, Time, int>> movement;
  std::vector<std::pair<NodeId, int>> supply_handles;

  Expansion(int nodes) : dinic(nodes), source(nodes - 2), sink(nodes - 1) {}
};

template <class Int>
Expansion<Int> build_expansion(const ScaledNetwork& net, const Layout& layout, bool keep_movement) {
  const NodeId n = net.node_count();
  const auto& arcs = net.arcs();
  const BigInt& bound = net.scaled_supply();
  const int nodes = static_cast<int>(layout.layers * n + 2);
  Expansion<Int> x(nodes);
  const auto sign = signs(net.balances());
  auto idx = [n](NodeId v, Time layer) { return static_cast<int>(layer * n + v); };
  std::vector<Int> caps;
  for (const auto& a : arcs) caps.push_back(narrow<Int>(clamp_cap(a, bound)));
  std::vector<Int> pool;
  for (const auto& b : net.balances()) pool.push_back(narrow<Int>(b < 0 ? BigInt(-b) : b));
  const Int unbounded = narrow<Int>(bound);

  struct Emitter {
    Expansion<Int>& x;
    const std::vector<ScaledNetwork::Arc>& arcs;
    const std::vector<Int>& caps;
    const std::vector<Int>& pool;
    const std::vector<int>& sign;
    const Int& unbounded;
    decltype(idx)& index;
    Time last;
    bool keep;
    void movement(EdgeId e, Time from, Time to) {
      const int h = x.dinic.add_arc(index(arcs[e].tail, from), index(arcs[e].head, to), caps[e]);
      if (keep) x.movement.emplace_back(e, from, h);
    }
    void holdover(NodeId v, Time layer) {
      x.dinic.add_arc(index(v, layer), index(v, layer + 1), sign[v] == 0 ? unbounded : pool[v]);
    }
    void supply(NodeId v) { x.supply_handles.emplace_back(v, x.dinic.add_arc(x.source, index(v, 0), pool[v])); }
    void demand(NodeId v) { x.dinic.add_arc(index(v, last), x.sink, pool[v]); }
  };
  NetworkArcView view;
  for (const auto& a : arcs) view.items.push_back({a.transit, a.infinite});
  Emitter em{x, arcs, caps, pool, sign, unbounded, idx, layout.layers - 1, keep_movement};
  emit_layout(n, view, sign, layout, em);
  return x;
}

bool fits_int64(const ScaledNetwork& net) {
  static const BigInt limit = BigInt(1) << 60;
  return net.scaled_supply() < limit;
}

template <class Int>
Rational value_with(const ScaledNetwork& net, const Layout& layout) {
  auto x = build_expansion<Int>(net, layout, false);
  const Int flow = x.dinic.max_flow(x.source, x.sink);
  return Rational(BigInt(flow)) / Rational(net.scale());
}

Rational expansion_value(const ScaledNetwork& net, const Layout& layout) {
  if (layout.layers == 0 || net.scaled_supply() == 0) return 0;
  return fits_int64(net) ? value_with<std::int64_t>(net, layout) : value_with<BigInt>(net, layout);
}

template <class Int>
std::pair<Rational, FlowOverTime> witness_with(const ScaledNetwork& net, const DirectedNetwork& network, Time T) {
  const Layout layout = Layout::plain(T);
  auto x = build_expansion<Int>(net, layout, true);
  const Int phase0 = x.dinic.max_flow(x.source, x.sink);
  // Completion: let unused supply rest in the source pools so every pool
  // starts full; sink arrivals cannot change (paths end at the first sink arc).
  const NodeId n = net.node_count();
  for (const auto& [v, h] : x.supply_handles) {
    (void)h;
    x.dinic.add_arc(static_cast<int>((T - 1) * n + v), x.sink, narrow<Int>(net.balances()[v]));
  }
  x.dinic.max_flow(x.source, x.sink);
  for (const auto& [v, h] : x.supply_handles) {
    if (x.dinic.flow_on(h) != narrow<Int>(net.balances()[v])) {
      throw CertificateError("time expansion could not inject the full supply of node " + network.node_name(v));
    }
  }
  const Rational scale(net.scale());
  FlowOverTime f(T, network.edge_count());
  for (const auto& [e, layer, h] : x.movement) {
    const Int flow = x.dinic.flow_on(h);
    if (flow != 0) f.add(e, layer, layer + 1, Rational(BigInt(flow)) / scale);
  }
  return {Rational(BigInt(phase0)) / scale, std::move(f)};
}

void require_nonnegative(Time T) {
  if (T < 0) throw PreconditionError("negative horizon");
}

}  // namespace

template <class Net>
ScaledNetwork ScaledNetwork::build(const Net& network) {
  ScaledNetwork s;
  s.nodes_ = network.node_count();
  BigInt lcm = 1;
  auto absorb = [&lcm](const Rational& q) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t()); };
  for (const auto& e : network.edges()) {
    if (e.capacity.is_finite()) absorb(e.capacity.value());
  }
  for (const auto& b : network.balances()) absorb(b);
  s.scale_ = lcm;
  const Rational q(lcm);
  for (const auto& e : network.edges()) {
    if (e.transit < 0) throw PreconditionError("negative transit time");
    Arc a{e.tail, e.head, e.transit, e.capacity.is_infinite(), 0};
    if (!a.infinite) a.capacity = BigInt(e.capacity.value() * q);
    s.arcs_.push_back(std::move(a));
  }
  for (const auto& b : network.balances()) {
    s.balances_.push_back(BigInt(b * q));
    if (b > 0) s.supply_ += s.balances_.back();
  }
  return s;
}

ScaledNetwork ScaledNetwork::from(const DirectedNetwork& network) { return build(network); }
ScaledNetwork ScaledNetwork::from_declared(const UndirectedNetwork& network) { return build(network); }

ScaledNetwork ScaledNetwork::flipped(std::uint64_t mask) const {
  ScaledNetwork copy = *this;
  for (EdgeId e = 0; e < static_cast<EdgeId>(arcs_.size()); ++e) {
    if ((mask >> e) & 1U) copy.flip(e);
  }
  return copy;
}

Rational time_expanded_value(const ScaledNetwork& network, Time T) {
  require_nonnegative(T);
  return expansion_value(network, Layout::plain(T));
}

Rational time_expanded_right_limit_value(const ScaledNetwork& network, Time T) {
  require_nonnegative(T);
  return expansion_value(network, Layout::limit(T));
}

std::pair<Rational, FlowOverTime> time_expanded_max_flow(const DirectedNetwork& network, Time T) {
  require_nonnegative(T);
  require_valid(network);
  const ScaledNetwork net = ScaledNetwork::from(network);
  if (T == 0 || net.scaled_supply() == 0) return {Rational(0), FlowOverTime(T, network.edge_count())};
  return fits_int64(net) ? witness_with<std::int64_t>(net, network, T) : witness_with<BigInt>(net, network, T);
}

TimeExpandedGraph build_time_expanded(const DirectedNetwork& network, Time T) {
  require_nonnegative(T);
  TimeExpandedGraph g;
  const NodeId n = network.node_count();
  g.base_nodes = n;
  g.layers = T;
  g.super_source = static_cast<int>(T * n);
  g.super_sink = g.super_source + 1;
  if (T == 0) {
    g.super_source = 0;
    g.super_sink = 1;
    return g;
  }
  NetworkArcView view;
  for (const auto& e : network.edges()) view.items.push_back({e.transit, e.capacity.is_infinite()});
  std::vector<int> sign;
  for (const auto& b : network.balances()) sign.push_back(sgn(b));
  struct Emitter {
    TimeExpandedGraph& g;
    const DirectedNetwork& net;
    Time last;
    Capacity pool(NodeId v) const {
      const Rational& b = net.balance(v);
      return b == 0 ? Capacity::infinite() : Capacity(b > 0 ? b : Rational(-b));
    }
    void movement(EdgeId e, Time from, Time to) {
      const Edge& edge = net.edge(e);
      g.arcs.push_back({g.node_index(edge.tail, from), g.node_index(edge.head, to), edge.capacity,
                        TenArcKind::movement, e, from});
    }
    void holdover(NodeId v, Time layer) {
      g.arcs.push_back({g.node_index(v, layer), g.node_index(v, layer + 1), pool(v), TenArcKind::holdover, v, layer});
    }
    void supply(NodeId v) { g.arcs.push_back({g.super_source, g.node_index(v, 0), pool(v), TenArcKind::supply, v, 0}); }
    void demand(NodeId v) {
      g.arcs.push_back({g.node_index(v, last), g.super_sink, pool(v), TenArcKind::demand, v, last});
    }
  };
  Emitter em{g, network, T - 1};
  emit_layout(n, view, sign, Layout::plain(T), em);
  return g;
}

}  // namespace tempoflow
