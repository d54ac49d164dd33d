#include "tempoflow/multicommodity.hpp"

#include <string>

#include "tempoflow/errors.hpp"
#include "tempoflow/lp.hpp"

namespace tempoflow {

namespace {

void require_static(const DirectedNetwork& net, const CommoditySet& commodities) {
  require_valid(net.with_balances({}));
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (net.edge(e).transit != 0) {
      throw PreconditionError("edge " + std::to_string(e) + " has nonzero transit; static oracle needs zero transits");
    }
  }
  const auto report = validate(commodities, net.node_count());
  if (!report.empty()) throw PreconditionError("invalid commodities: " + report.front());
}

bool usable(const Edge& e) { return e.capacity.is_infinite() || e.capacity.value() > 0; }

std::vector<char> reach(const DirectedNetwork& net, const std::vector<Rational>& b, bool forward) {
  std::vector<char> seen(net.node_count(), 0);
  std::vector<NodeId> stack;
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (forward ? b[v] > 0 : b[v] < 0) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const Edge& e : net.edges()) {
      if (!usable(e)) continue;
      const NodeId from = forward ? e.tail : e.head;
      const NodeId to = forward ? e.head : e.tail;
      if (from == v && !seen[to]) {
        seen[to] = 1;
        stack.push_back(to);
      }
    }
  }
  return seen;
}

Rational total_demand(const Commodity& c) {
  Rational d = 0;
  for (const auto& b : c.balances) {
    if (b < 0) d -= b;
  }
  return d;
}

enum class Mode { aggregate, balanced };

struct Model {
  LinearProgram lp;
  int lambda = -1;
};

// lambda_value set: lambda is a constant and the LP is a pure feasibility check.
Model build(const DirectedNetwork& net, const CommoditySet& cs, Mode mode, const std::optional<Rational>& lambda_value) {
  Model m;
  if (!lambda_value) m.lambda = m.lp.add_variable(1);
  std::vector<std::vector<std::pair<int, Rational>>> cap_rows(net.edge_count());
  for (const Commodity& c : cs.commodities) {
    const auto from_src = reach(net, c.balances, true);
    const auto to_sink = reach(net, c.balances, false);
    std::vector<std::vector<std::pair<int, Rational>>> net_out(net.node_count());
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      const Edge& edge = net.edge(e);
      if (!usable(edge) || !from_src[edge.tail] || !to_sink[edge.head]) continue;
      const int x = m.lp.add_variable();
      net_out[edge.tail].emplace_back(x, 1);
      net_out[edge.head].emplace_back(x, -1);
      if (edge.capacity.is_finite()) cap_rows[e].emplace_back(x, 1);
    }
    const Rational D = total_demand(c);
    std::vector<std::pair<int, Rational>> delivered;
    for (NodeId v = 0; v < net.node_count(); ++v) {
      const Rational& b = c.balances[v];
      auto row = net_out[v];
      if (row.empty() && b == 0) continue;
      if (mode == Mode::balanced || b == 0) {
        Rational rhs = 0;
        if (b != 0) {
          if (lambda_value) {
            rhs = *lambda_value * b;
          } else {
            row.emplace_back(m.lambda, -b);
          }
        }
        m.lp.add_row(std::move(row), LinearProgram::Sense::eq, rhs);
        continue;
      }
      if (b > 0) {
        m.lp.add_row(row, LinearProgram::Sense::le, b);
        m.lp.add_row(std::move(row), LinearProgram::Sense::ge, 0);
      } else {
        m.lp.add_row(row, LinearProgram::Sense::ge, b);  // net_out >= -|b|
        for (const auto& [x, coef] : row) delivered.emplace_back(x, -coef);
        m.lp.add_row(std::move(row), LinearProgram::Sense::le, 0);
      }
    }
    if (mode == Mode::aggregate && D > 0) {
      Rational rhs = 0;
      if (lambda_value) {
        rhs = *lambda_value * D;
      } else {
        delivered.emplace_back(m.lambda, -D);
      }
      m.lp.add_row(std::move(delivered), LinearProgram::Sense::ge, rhs);
    }
  }
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    if (!cap_rows[e].empty()) m.lp.add_row(std::move(cap_rows[e]), LinearProgram::Sense::le, net.edge(e).capacity.value());
  }
  if (!lambda_value && mode == Mode::aggregate) m.lp.add_row({{m.lambda, 1}}, LinearProgram::Sense::le, 1);
  return m;
}

// Every commodity with demand has a source reaching one of its sinks.
bool aggregate_reachable(const DirectedNetwork& net, const CommoditySet& cs) {
  for (const Commodity& c : cs.commodities) {
    if (total_demand(c) == 0) continue;
    const auto seen = reach(net, c.balances, true);
    bool any = false;
    for (NodeId v = 0; v < net.node_count(); ++v) any = any || (c.balances[v] < 0 && seen[v]);
    if (!any) return false;
  }
  return true;
}

// Every sink reachable from a source and every source reaching a sink.
bool balanced_reachable(const DirectedNetwork& net, const CommoditySet& cs) {
  for (const Commodity& c : cs.commodities) {
    const auto fwd = reach(net, c.balances, true);
    const auto bwd = reach(net, c.balances, false);
    for (NodeId v = 0; v < net.node_count(); ++v) {
      if ((c.balances[v] < 0 && !fwd[v]) || (c.balances[v] > 0 && !bwd[v])) return false;
    }
  }
  return true;
}

}  // namespace

Rational max_concurrent_value(const DirectedNetwork& network, const CommoditySet& commodities) {
  require_static(network, commodities);
  if (!aggregate_reachable(network, commodities)) return 0;
  Model m = build(network, commodities, Mode::aggregate, std::nullopt);
  const LpResult r = solve(m.lp);
  if (r.status != LpStatus::optimal) throw CertificateError("concurrent LP not optimal");
  return r.value;
}

bool static_mc_feasibility(const DirectedNetwork& network, const CommoditySet& commodities, const Rational& lambda) {
  require_static(network, commodities);
  if (lambda < 0 || lambda > 1) throw PreconditionError("lambda must lie in [0, 1]");
  if (lambda == 0) return true;
  if (!aggregate_reachable(network, commodities)) return false;
  Model m = build(network, commodities, Mode::aggregate, lambda);
  return solve(m.lp).status == LpStatus::optimal;
}

std::optional<Rational> max_balanced_scaling(const DirectedNetwork& network, const CommoditySet& commodities) {
  require_static(network, commodities);
  if (!balanced_reachable(network, commodities)) return Rational(0);
  Model m = build(network, commodities, Mode::balanced, std::nullopt);
  const LpResult r = solve(m.lp);
  if (r.status == LpStatus::unbounded) return std::nullopt;
  if (r.status != LpStatus::optimal) throw CertificateError("scaling LP infeasible at lambda = 0");
  return r.value;
}

MulticommodityQuickest quickest_multicommodity_time(const DirectedNetwork& network, const CommoditySet& commodities) {
  MulticommodityQuickest q;
  q.scaling = max_balanced_scaling(network, commodities);
  if (!q.scaling) {
    q.time = Rational(0);
  } else if (*q.scaling > 0) {
    q.time = Rational(1 / *q.scaling);
  }
  return q;
}

}  // namespace tempoflow
