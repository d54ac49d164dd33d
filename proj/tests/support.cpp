#include "support.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "tempoflow/lp.hpp"

namespace tftest {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

namespace {

template <EdgeKind Kind>
NetworkBuilder<Kind> random_edges(Rng& rng, const RandomShape& shape, int n) {
  NetworkBuilder<Kind> b;
  for (int v = 0; v < n; ++v) {
    std::string name = v == 0 ? "s" : v == n - 1 ? "t" : "v" + std::to_string(v);
    b.add_node(name);
  }
  const int m = uniform(rng, 1, shape.max_edges);
  // Lead with an s-t path so most instances carry flow.
  std::vector<int> inner;
  for (int v = 1; v < n - 1; ++v) inner.push_back(v);
  std::shuffle(inner.begin(), inner.end(), rng);
  inner.resize(uniform(rng, 0, std::min(n - 2, m - 1)));
  std::vector<int> path{0};
  path.insert(path.end(), inner.begin(), inner.end());
  path.push_back(n - 1);
  for (int i = 0; i < m; ++i) {
    int tail, head;
    if (i + 1 < static_cast<int>(path.size())) {
      tail = path[i];
      head = path[i + 1];
    } else {
      tail = uniform(rng, 0, n - 1);
      head = uniform(rng, 0, n - 2);
      if (head >= tail) ++head;
    }
    Capacity cap = Rational(uniform(rng, 1, shape.max_capacity));
    if (shape.allow_infinite && uniform(rng, 0, 4) == 0) cap = Capacity::infinite();
    b.add_edge(tail, head, cap, uniform(rng, 0, static_cast<int>(shape.max_transit)));
  }
  return b;
}

struct Arc {
  NodeId tail;
  NodeId head;
  Time transit;
  int group;
};

Rational lp_over_arcs(NodeId n, const std::vector<Rational>& balances, const std::vector<Arc>& arcs,
                      const std::vector<Capacity>& caps, Time T) {
  LinearProgram lp;
  // var[a][theta]: rate on [theta, theta+1), theta < T - tau_a.
  std::vector<std::vector<int>> var(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (Time th = 0; th + arcs[a].transit < T; ++th) var[a].push_back(lp.add_variable());
  }
  for (std::size_t g = 0; g < caps.size(); ++g) {
    if (caps[g].is_infinite()) continue;
    for (Time th = 0; th < T; ++th) {
      std::vector<std::pair<int, Rational>> row;
      for (std::size_t a = 0; a < arcs.size(); ++a) {
        if (arcs[a].group == static_cast<int>(g) && th < static_cast<Time>(var[a].size())) {
          row.emplace_back(var[a][th], 1);
        }
      }
      if (!row.empty()) lp.add_row(std::move(row), LinearProgram::Sense::le, caps[g].value());
    }
  }
  auto excess_row = [&](NodeId v, Time th) {
    std::vector<std::pair<int, Rational>> row;
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      for (Time s = 0; s < static_cast<Time>(var[a].size()); ++s) {
        if (arcs[a].head == v && s + arcs[a].transit < th) row.emplace_back(var[a][s], 1);
        if (arcs[a].tail == v && s < th) row.emplace_back(var[a][s], -1);
      }
    }
    return row;
  };
  std::vector<Rational> objective(lp.variable_count());
  for (NodeId v = 0; v < n; ++v) {
    const Rational& b = balances[v];
    for (Time th = 1; th <= T; ++th) {
      auto row = excess_row(v, th);
      if (row.empty()) continue;
      if (b == 0) {
        lp.add_row(row, th == T ? LinearProgram::Sense::eq : LinearProgram::Sense::ge, 0);
      } else if (b > 0) {
        lp.add_row(row, LinearProgram::Sense::le, 0);
        lp.add_row(row, LinearProgram::Sense::ge, -b);
      } else {
        lp.add_row(row, LinearProgram::Sense::ge, 0);
        lp.add_row(row, LinearProgram::Sense::le, -b);
      }
      if (b < 0 && th == T) {
        for (const auto& [j, c] : row) objective[j] += c;
      }
    }
  }
  // Objective lives in the variables; rebuild with it.
  LinearProgram with_obj;
  for (int j = 0; j < lp.variable_count(); ++j) with_obj.add_variable(objective[j]);
  for (const auto& r : lp.rows()) with_obj.add_row(r.coeffs, r.sense, r.rhs);
  const LpResult res = solve(with_obj);
  if (res.status != LpStatus::optimal) throw std::runtime_error("oracle LP not optimal");
  return res.value;
}

}  // namespace

DirectedNetwork random_st_directed(Rng& rng, const RandomShape& shape, bool loose, int supply) {
  const int n = uniform(rng, 2, shape.max_nodes);
  auto b = random_edges<EdgeKind::directed>(rng, shape, n);
  const Rational s = loose ? Rational(1000000) : Rational(supply);
  b.set_balance(0, s);
  b.set_balance(n - 1, -s);
  return b.build();
}

UndirectedNetwork random_st_undirected(Rng& rng, const RandomShape& shape, int supply) {
  const int n = uniform(rng, 2, shape.max_nodes);
  auto b = random_edges<EdgeKind::undirected>(rng, shape, n);
  b.set_balance(0, supply);
  b.set_balance(n - 1, -supply);
  return b.build();
}

UndirectedNetwork random_multi_terminal(Rng& rng, const RandomShape& shape, int sources, int sinks) {
  const int n = std::max(sources + sinks, uniform(rng, sources + sinks, shape.max_nodes));
  UndirectedBuilder b;
  for (int v = 0; v < n; ++v) b.add_node("n" + std::to_string(v));
  // A spanning path keeps every terminal reachable.
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  const int m = std::max(n - 1, uniform(rng, n - 1, shape.max_edges));
  for (int i = 0; i < m; ++i) {
    int tail, head;
    if (i < n - 1) {
      tail = order[i];
      head = order[i + 1];
    } else {
      tail = uniform(rng, 0, n - 1);
      head = uniform(rng, 0, n - 2);
      if (head >= tail) ++head;
    }
    b.add_edge(tail, head, Rational(uniform(rng, 1, shape.max_capacity)),
               uniform(rng, 0, static_cast<int>(shape.max_transit)));
  }
  int supply = 0;
  for (int i = 0; i < sources; ++i) {
    const int amount = uniform(rng, 1, 3);
    b.set_balance(i, amount);
    supply += amount;
  }
  for (int i = 0; i < sinks; ++i) {
    const int amount = i + 1 == sinks ? supply : std::min(supply - (sinks - i - 1), uniform(rng, 1, 3));
    b.set_balance(sources + i, -amount);
    supply -= amount;
  }
  return b.build();
}

Rational lp_max_flow_over_time(const DirectedNetwork& network, Time T) {
  std::vector<Arc> arcs;
  std::vector<Capacity> caps;
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    arcs.push_back({edge.tail, edge.head, edge.transit, e});
    caps.push_back(edge.capacity);
  }
  return lp_over_arcs(network.node_count(), network.balances(), arcs, caps, T);
}

Rational lp_max_flow_over_time(const UndirectedNetwork& network, Time T) {
  std::vector<Arc> arcs;
  std::vector<Capacity> caps;
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    arcs.push_back({edge.tail, edge.head, edge.transit, e});
    arcs.push_back({edge.head, edge.tail, edge.transit, e});
    caps.push_back(edge.capacity);
  }
  return lp_over_arcs(network.node_count(), network.balances(), arcs, caps, T);
}

Rational lp_temporally_repeated_objective(const DirectedNetwork& network, NodeId source, NodeId sink, Time T) {
  LinearProgram lp;
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    Rational c = -Rational(edge.transit);
    if (edge.tail == source) c += T;
    if (edge.head == source) c -= T;
    lp.add_variable(c);
  }
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    lp.add_row({{e, 1}}, LinearProgram::Sense::le, network.edge(e).capacity.value());
  }
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (v == source || v == sink) continue;
    std::vector<std::pair<int, Rational>> row;
    for (EdgeId e = 0; e < network.edge_count(); ++e) {
      if (network.edge(e).head == v) row.emplace_back(e, 1);
      if (network.edge(e).tail == v) row.emplace_back(e, -1);
    }
    if (!row.empty()) lp.add_row(std::move(row), LinearProgram::Sense::eq, 0);
  }
  const LpResult res = solve(lp);
  if (res.status != LpStatus::optimal) throw std::runtime_error("oracle LP not optimal");
  return res.value;
}

std::vector<std::vector<EdgeId>> all_simple_paths(const DirectedNetwork& network, NodeId source, NodeId sink) {
  std::vector<std::vector<EdgeId>> out;
  std::vector<EdgeId> path;
  std::vector<char> on_path(network.node_count(), 0);
  std::function<void(NodeId)> walk = [&](NodeId v) {
    if (v == sink) {
      out.push_back(path);
      return;
    }
    on_path[v] = 1;
    for (EdgeId e = 0; e < network.edge_count(); ++e) {
      const Edge& edge = network.edge(e);
      if (edge.tail != v || on_path[edge.head]) continue;
      if (edge.capacity.is_finite() && edge.capacity.value() == 0) continue;
      path.push_back(e);
      walk(edge.head);
      path.pop_back();
    }
    on_path[v] = 0;
  };
  walk(source);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace tftest
