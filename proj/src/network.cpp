#include "tempoflow/network.hpp"

#include <sstream>

#include "tempoflow/errors.hpp"

namespace tempoflow {

namespace {

template <EdgeKind Kind>
std::vector<std::string> validate_impl(const NetworkOverTime<Kind>& net) {
  std::vector<std::string> report;
  Rational sum = 0;
  for (const auto& b : net.balances()) sum += b;
  if (sum != 0) report.push_back("balance sum != 0 (is " + to_string(sum) + ")");
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& edge = net.edge(e);
    std::ostringstream where;
    where << "edge " << e << ": ";
    if (edge.tail < 0 || edge.tail >= net.node_count() || edge.head < 0 ||
        edge.head >= net.node_count()) {
      report.push_back(where.str() + "endpoint not a declared node");
    } else if (edge.tail == edge.head) {
      report.push_back(where.str() + "endpoints not distinct");
    }
    if (edge.transit < 0) report.push_back(where.str() + "negative transit time");
  }
  if (net.horizon() && *net.horizon() < 0) report.push_back("negative horizon");
  return report;
}

template <EdgeKind Kind>
void require_valid_impl(const NetworkOverTime<Kind>& net) {
  const auto report = validate_impl(net);
  if (report.empty()) return;
  std::string msg = "invalid network:";
  for (const auto& line : report) msg += "\n  " + line;
  throw PreconditionError(msg);
}

}  // namespace

std::vector<std::string> validate(const UndirectedNetwork& network) { return validate_impl(network); }
std::vector<std::string> validate(const DirectedNetwork& network) { return validate_impl(network); }
void require_valid(const UndirectedNetwork& network) { require_valid_impl(network); }
void require_valid(const DirectedNetwork& network) { require_valid_impl(network); }

std::vector<std::string> validate(const CommoditySet& commodities, NodeId node_count) {
  std::vector<std::string> report;
  for (const auto& c : commodities.commodities) {
    if (static_cast<NodeId>(c.balances.size()) != node_count) {
      report.push_back("commodity " + std::to_string(c.id) + ": balance vector size mismatch");
      continue;
    }
    Rational sum = 0;
    for (const auto& b : c.balances) sum += b;
    if (sum != 0) report.push_back("commodity " + std::to_string(c.id) + ": balance sum != 0");
  }
  return report;
}

Orientation Orientation::from_mask(const UndirectedNetwork& network, std::uint64_t mask) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  arcs.reserve(network.edge_count());
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    if ((mask >> e) & 1U) {
      arcs.emplace_back(edge.head, edge.tail);
    } else {
      arcs.emplace_back(edge.tail, edge.head);
    }
  }
  return Orientation(std::move(arcs));
}

Orientation Orientation::canonical(const UndirectedNetwork& network) {
  std::vector<std::pair<NodeId, NodeId>> arcs;
  for (const Edge& edge : network.edges()) {
    arcs.emplace_back(std::min(edge.tail, edge.head), std::max(edge.tail, edge.head));
  }
  return Orientation(std::move(arcs));
}

std::uint64_t Orientation::to_mask(const UndirectedNetwork& network) const {
  std::uint64_t mask = 0;
  for (EdgeId e = 0; e < size(); ++e) {
    if (arcs_[e].first != network.edge(e).tail) mask |= std::uint64_t{1} << e;
  }
  return mask;
}

DirectedNetwork apply_orientation(const UndirectedNetwork& network, const Orientation& sigma) {
  if (sigma.size() != network.edge_count()) {
    throw PreconditionError("orientation covers " + std::to_string(sigma.size()) +
                            " edges, network has " + std::to_string(network.edge_count()));
  }
  std::vector<Edge> edges = network.edges();
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const auto [tail, head] = sigma.arc(e);
    const Edge& orig = network.edge(e);
    const bool same = tail == orig.tail && head == orig.head;
    const bool flipped = tail == orig.head && head == orig.tail;
    if (!same && !flipped) {
      throw PreconditionError("orientation of edge " + std::to_string(e) +
                              " is not a permutation of its endpoints");
    }
    edges[e].tail = tail;
    edges[e].head = head;
  }
  return DirectedNetwork(network.node_names(), std::move(edges), network.balances(),
                         network.horizon());
}

DirectedNetwork gadget_transform(const UndirectedNetwork& network) {
  const NodeId n = network.node_count();
  std::vector<std::string> names = network.node_names();
  std::vector<Edge> arcs;
  arcs.reserve(5 * network.edge_count());
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    const NodeId vw = n + 2 * e;
    const NodeId vw2 = vw + 1;
    const std::string base = network.node_name(edge.tail) + "~" + network.node_name(edge.head);
    names.push_back(base + "#" + std::to_string(e));
    names.push_back(base + "#" + std::to_string(e) + "'");
    const Capacity inf = Capacity::infinite();
    arcs.push_back({edge.tail, vw, inf, 0});
    arcs.push_back({edge.head, vw, inf, 0});
    arcs.push_back({vw, vw2, edge.capacity, edge.transit});
    arcs.push_back({vw2, edge.tail, inf, 0});
    arcs.push_back({vw2, edge.head, inf, 0});
  }
  std::vector<Rational> balances = network.balances();
  balances.resize(names.size());
  return DirectedNetwork(std::move(names), std::move(arcs), std::move(balances), network.horizon());
}

DirectedNetwork as_declared_directed(const UndirectedNetwork& network) {
  return DirectedNetwork(network.node_names(), network.edges(), network.balances(),
                         network.horizon());
}

}  // namespace tempoflow
