#include "tempoflow/static_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "tempoflow/errors.hpp"

namespace tempoflow {

namespace {

constexpr Time kUnreached = std::numeric_limits<Time>::max();

// Residual view of a directed network under a static flow. Residual arc
// handle 2e is edge e forward, 2e+1 its reverse.
class Residual {
 public:
  Residual(const DirectedNetwork& net, std::vector<Rational>& flow) : net_(net), flow_(flow), adj_(net.node_count()) {
    // Forward arcs first, then reverse arcs, each ascending by edge id.
    for (EdgeId e = 0; e < net.edge_count(); ++e) adj_[net.edge(e).tail].push_back(2 * e);
    for (EdgeId e = 0; e < net.edge_count(); ++e) adj_[net.edge(e).head].push_back(2 * e + 1);
  }

  const std::vector<int>& out(NodeId v) const { return adj_[v]; }
  NodeId head(int a) const {
    const Edge& edge = net_.edge(a / 2);
    return a % 2 == 0 ? edge.head : edge.tail;
  }
  Time cost(int a) const { return a % 2 == 0 ? net_.edge(a / 2).transit : -net_.edge(a / 2).transit; }
  bool unbounded(int a) const { return a % 2 == 0 && net_.edge(a / 2).capacity.is_infinite(); }
  bool usable(int a) const {
    if (a % 2 == 1) return flow_[a / 2] > 0;
    const Capacity& cap = net_.edge(a / 2).capacity;
    return cap.is_infinite() || flow_[a / 2] < cap.value();
  }
  // Precondition: !unbounded(a).
  Rational room(int a) const {
    if (a % 2 == 1) return flow_[a / 2];
    return net_.edge(a / 2).capacity.value() - flow_[a / 2];
  }
  void push(int a, const Rational& amount) {
    if (a % 2 == 0) {
      flow_[a / 2] += amount;
    } else {
      flow_[a / 2] -= amount;
    }
  }

 private:
  const DirectedNetwork& net_;
  std::vector<Rational>& flow_;
  std::vector<std::vector<int>> adj_;
};

// Dijkstra on reduced costs; returns distances (kUnreached if unreachable).
std::vector<Time> reduced_distances(const Residual& r, NodeId n, NodeId source, const std::vector<Time>& pi) {
  std::vector<Time> dist(n, kUnreached);
  using Item = std::pair<Time, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (d != dist[v]) continue;
    for (int a : r.out(v)) {
      if (!r.usable(a)) continue;
      const NodeId w = r.head(a);
      const Time nd = d + r.cost(a) + pi[v] - pi[w];
      if (nd < dist[w]) {
        dist[w] = nd;
        heap.emplace(nd, w);
      }
    }
  }
  return dist;
}

// First source-sink path found by DFS over arcs accepted by `tight`,
// expanding in adjacency order. Dead ends are marked and never revisited.
template <class Tight>
std::optional<std::vector<int>> ordered_dfs(const Residual& r, NodeId n, NodeId source, NodeId sink, Tight tight) {
  std::vector<char> visited(n, 0);
  std::vector<int> arc_stack;
  std::vector<std::pair<NodeId, std::size_t>> stack{{source, 0}};
  visited[source] = 1;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (v == sink) return arc_stack;
    const auto& out = r.out(v);
    bool advanced = false;
    while (next < out.size()) {
      const int a = out[next++];
      const NodeId w = r.head(a);
      if (visited[w] || !r.usable(a) || !tight(v, a, w)) continue;
      visited[w] = 1;
      arc_stack.push_back(a);
      stack.emplace_back(w, 0);
      advanced = true;
      break;
    }
    if (!advanced) {
      stack.pop_back();
      if (!arc_stack.empty()) arc_stack.pop_back();
    }
  }
  return std::nullopt;
}

void require_node(const DirectedNetwork& net, NodeId v, const char* what) {
  if (v < 0 || v >= net.node_count()) throw PreconditionError(std::string(what) + " not in network");
}

}  // namespace

std::optional<std::vector<EdgeId>> shortest_path_deterministic(const DirectedNetwork& network, NodeId source,
                                                               NodeId sink) {
  require_node(network, source, "source");
  require_node(network, sink, "sink");
  std::vector<Rational> zero(network.edge_count());
  const Residual r(network, zero);
  const NodeId n = network.node_count();
  const std::vector<Time> pi(n, 0);
  const auto dist = reduced_distances(r, n, source, pi);
  if (dist[sink] == kUnreached) return std::nullopt;
  auto path = ordered_dfs(r, n, source, sink, [&](NodeId v, int a, NodeId w) {
    return dist[w] <= dist[sink] && dist[v] + r.cost(a) == dist[w];
  });
  std::vector<EdgeId> edges;
  for (int a : *path) edges.push_back(a / 2);
  return edges;
}

StaticFlow max_temporally_repeated_static_flow(const DirectedNetwork& network, NodeId source, NodeId sink, Time T) {
  if (T < 0) throw PreconditionError("negative horizon");
  require_node(network, source, "source");
  require_node(network, sink, "sink");
  for (const auto& e : network.edges()) {
    if (e.transit < 0) throw PreconditionError("negative transit time");
  }
  StaticFlow x{std::vector<Rational>(network.edge_count())};
  if (source == sink) return x;
  Residual r(network, x.values);
  const NodeId n = network.node_count();
  std::vector<Time> pi(n, 0);
  while (true) {
    const auto dist = reduced_distances(r, n, source, pi);
    if (dist[sink] == kUnreached) break;
    const Time length = dist[sink] + pi[sink] - pi[source];
    if (length >= T) break;
    const auto path = ordered_dfs(r, n, source, sink, [&](NodeId v, int a, NodeId w) {
      return dist[w] <= dist[sink] && dist[v] + r.cost(a) + pi[v] - pi[w] == dist[w];
    });
    if (!path) throw CertificateError("shortest-path subgraph lost the sink");
    std::optional<Rational> bottleneck;
    for (int a : *path) {
      if (r.unbounded(a)) continue;
      const Rational room = r.room(a);
      if (!bottleneck || room < *bottleneck) bottleneck = room;
    }
    if (!bottleneck) {
      throw PreconditionError("uncapacitated source-sink path shorter than the horizon; objective unbounded");
    }
    for (int a : *path) r.push(a, *bottleneck);
    const Time cap = dist[sink];
    for (NodeId v = 0; v < n; ++v) pi[v] += std::min(dist[v], cap);
  }
  return x;
}

Rational flow_amount(const StaticFlow& x, const DirectedNetwork& network, NodeId source) {
  Rational amount = 0;
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    if (network.edge(e).tail == source) amount += x.values[e];
    if (network.edge(e).head == source) amount -= x.values[e];
  }
  return amount;
}

Rational temporally_repeated_objective(const StaticFlow& x, const DirectedNetwork& network, NodeId source, Time T) {
  Rational obj = flow_amount(x, network, source) * T;
  for (EdgeId e = 0; e < network.edge_count(); ++e) obj -= x.values[e] * network.edge(e).transit;
  return obj;
}

PathDecomposition path_decomposition(const StaticFlow& x, const DirectedNetwork& network, NodeId source, NodeId sink) {
  require_node(network, source, "source");
  require_node(network, sink, "sink");
  if (static_cast<EdgeId>(x.values.size()) != network.edge_count()) {
    throw PreconditionError("flow/network edge count mismatch");
  }
  const NodeId n = network.node_count();
  std::vector<Rational> balance(n);
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    const Rational& v = x.values[e];
    if (v < 0 || (edge.capacity.is_finite() && v > edge.capacity.value())) {
      throw PreconditionError("flow violates capacity on edge " + std::to_string(e));
    }
    balance[edge.tail] -= v;
    balance[edge.head] += v;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (v != source && v != sink && balance[v] != 0) {
      throw PreconditionError("flow violates conservation at node " + network.node_name(v));
    }
  }
  std::vector<Rational> rest = x.values;
  std::vector<std::vector<EdgeId>> out(n);
  for (EdgeId e = 0; e < network.edge_count(); ++e) out[network.edge(e).tail].push_back(e);

  auto make_path = [&](std::vector<EdgeId> edges) {
    Rational bottleneck = rest[edges.front()];
    Time tau = 0;
    for (EdgeId e : edges) {
      bottleneck = std::min(bottleneck, rest[e]);
      tau += network.edge(e).transit;
    }
    for (EdgeId e : edges) rest[e] -= bottleneck;
    return FlowPath{std::move(edges), bottleneck, tau};
  };

  PathDecomposition result;
  while (source != sink) {
    std::vector<char> visited(n, 0);
    std::vector<EdgeId> edges;
    std::vector<std::pair<NodeId, std::size_t>> stack{{source, 0}};
    visited[source] = 1;
    bool found = false;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (v == sink) {
        found = true;
        break;
      }
      bool advanced = false;
      while (next < out[v].size()) {
        const EdgeId e = out[v][next++];
        const NodeId w = network.edge(e).head;
        if (rest[e] == 0 || visited[w]) continue;
        visited[w] = 1;
        edges.push_back(e);
        stack.emplace_back(w, 0);
        advanced = true;
        break;
      }
      if (!advanced) {
        stack.pop_back();
        if (!edges.empty()) edges.pop_back();
      }
    }
    if (!found) break;
    result.paths.push_back(make_path(std::move(edges)));
  }
  // Remaining flow conserves everywhere: peel cycles by smallest-id walks.
  for (NodeId start = 0; start < n; ++start) {
    while (true) {
      auto first = std::find_if(out[start].begin(), out[start].end(), [&](EdgeId e) { return rest[e] > 0; });
      if (first == out[start].end()) break;
      std::vector<EdgeId> walk;
      std::vector<int> seen_at(n, -1);
      NodeId v = start;
      while (seen_at[v] < 0) {
        seen_at[v] = static_cast<int>(walk.size());
        const auto it = std::find_if(out[v].begin(), out[v].end(), [&](EdgeId e) { return rest[e] > 0; });
        if (it == out[v].end()) throw CertificateError("cycle walk stalled; conservation check missed a node");
        walk.push_back(*it);
        v = network.edge(*it).head;
      }
      result.cycles.push_back(make_path(std::vector<EdgeId>(walk.begin() + seen_at[v], walk.end())));
    }
  }
  return result;
}

}  // namespace tempoflow
