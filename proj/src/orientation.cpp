#include "tempoflow/orientation.hpp"

#include <omp.h>

#include <algorithm>
#include <atomic>
#include <limits>
#include <string>

#include "tempoflow/errors.hpp"
#include "tempoflow/parallel.hpp"
#include "tempoflow/time_expanded.hpp"

namespace tempoflow {

namespace {

void check_cap(std::size_t k, const SearchOptions& options) {
  const std::size_t cap = std::min<std::size_t>(static_cast<std::size_t>(std::max(options.max_edges, 0)), 62);
  if (k > cap) {
    throw CapExceededError("enumeration over " + std::to_string(k) + " edges exceeds cap " + std::to_string(cap));
  }
}

// Runs eval over masks 0..count-1. State is a per-worker ScaledNetwork that
// tracks the currently applied flips. Accept(candidate) merges into the
// worker-local best; merge() combines workers (order-independent).
template <class Best, class Eval, class Merge>
Best enumerate_masks(const ScaledNetwork& base, const std::vector<EdgeId>& free_edges, int jobs, bool parallel,
                     Best init, Eval eval, Merge merge) {
  const std::uint64_t count = std::uint64_t{1} << free_edges.size();
  auto step = [&](ScaledNetwork& s, std::uint64_t& cur, std::uint64_t mask, Best& local) {
    const std::uint64_t diff = cur ^ mask;
    for (std::size_t i = 0; i < free_edges.size(); ++i) {
      if ((diff >> i) & 1U) s.flip(free_edges[i]);
    }
    cur = mask;
    eval(s, mask, local);
  };
  if (!parallel || jobs <= 1) {
    Best best = init;
    ScaledNetwork s = base;
    std::uint64_t cur = 0;
    for (std::uint64_t mask = 0; mask < count; ++mask) step(s, cur, mask, best);
    return best;
  }
  Best best = init;
#pragma omp parallel num_threads(jobs)
  {
    Best local = init;
    ScaledNetwork s = base;
    std::uint64_t cur = 0;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(count); ++m) {
      step(s, cur, static_cast<std::uint64_t>(m), local);
    }
#pragma omp critical(tempoflow_enumeration_merge)
    merge(best, local);
  }
  return best;
}

}  // namespace

EnumerationSpace EnumerationSpace::all_edges(const UndirectedNetwork& network) {
  EnumerationSpace space{Orientation::from_mask(network, 0), {}};
  for (EdgeId e = 0; e < network.edge_count(); ++e) space.free_edges.push_back(e);
  return space;
}

Orientation EnumerationSpace::orientation(std::uint64_t mask) const {
  Orientation o = base;
  for (std::size_t i = 0; i < free_edges.size(); ++i) {
    if ((mask >> i) & 1U) {
      const auto [tail, head] = o.arc(free_edges[i]);
      o.set(free_edges[i], head, tail);
    }
  }
  return o;
}

FlowSearchResult best_flow_orientation(const UndirectedNetwork& network, Time T, const EnumerationSpace& space,
                                       const SearchOptions& options) {
  require_valid(network);
  check_cap(space.free_edges.size(), options);
  const ScaledNetwork base = ScaledNetwork::from(apply_orientation(network, space.base));
  struct Best {
    std::optional<Rational> value;
    std::uint64_t mask = 0;
  };
  auto better = [](const Rational& v, std::uint64_t mask, const Best& b) {
    return !b.value || v > *b.value || (v == *b.value && mask < b.mask);
  };
  auto eval = [&](const ScaledNetwork& s, std::uint64_t mask, Best& local) {
    Rational v = time_expanded_value(s, T);
    if (better(v, mask, local)) local = {std::move(v), mask};
  };
  auto merge = [&](Best& into, const Best& from) {
    if (from.value && better(*from.value, from.mask, into)) into = from;
  };
  const Best best = enumerate_masks(base, space.free_edges, resolve_jobs(options.jobs), options.parallel, Best{}, eval,
                                    merge);
  return {*best.value, best.mask, space.orientation(best.mask)};
}

QuickestSearchResult best_quickest_orientation(const UndirectedNetwork& network, const EnumerationSpace& space,
                                               const SearchOptions& options) {
  require_valid(network);
  check_cap(space.free_edges.size(), options);
  const ScaledNetwork base = ScaledNetwork::from(apply_orientation(network, space.base));
  constexpr Time kNone = std::numeric_limits<Time>::max();
  // Global bound only prunes orientations that cannot reach the current best
  // time; every orientation that can is evaluated exactly, so the reduction
  // below is deterministic regardless of scheduling.
  std::atomic<Time> bound{kNone};
  struct Best {
    Time time = kNone;
    std::uint64_t mask = 0;
  };
  auto better = [](Time t, std::uint64_t mask, const Best& b) {
    return t < b.time || (t == b.time && mask < b.mask);
  };
  auto eval = [&](const ScaledNetwork& s, std::uint64_t mask, Best& local) {
    const Time limit = bound.load(std::memory_order_relaxed);
    if (!routable_eventually(s)) return;
    const QuickestTime q =
        limit == kNone ? quickest_time_scaled(s, std::nullopt, false) : quickest_time_scaled(s, limit, false);
    if (!q.feasible()) return;
    const Time t = *q.ceil_infimum;
    if (better(t, mask, local)) local = {t, mask};
    Time cur = bound.load(std::memory_order_relaxed);
    while (t < cur && !bound.compare_exchange_weak(cur, t, std::memory_order_relaxed)) {
    }
  };
  auto merge = [&](Best& into, const Best& from) {
    if (from.time != kNone && better(from.time, from.mask, into)) into = from;
  };
  const Best best = enumerate_masks(base, space.free_edges, resolve_jobs(options.jobs), options.parallel, Best{}, eval,
                                    merge);
  QuickestSearchResult r;
  if (best.time != kNone) {
    r.time = best.time;
    r.mask = best.mask;
  }
  r.orientation = space.orientation(r.mask);
  return r;
}

namespace {

std::optional<Rational> ratio_of(const Rational& num, const Rational& den) {
  if (den == 0) return num == 0 ? std::optional<Rational>(1) : std::nullopt;
  return Rational(num / den);
}

}  // namespace

PriceReport best_orientation_in(const UndirectedNetwork& network, Objective objective, const EnumerationSpace& space,
                                const SearchOptions& options) {
  require_valid(network);
  PriceReport report;
  report.objective = objective;
  if (objective == Objective::flow_at_horizon) {
    if (!network.horizon()) throw PreconditionError("flow objective needs a horizon");
    const Time T = *network.horizon();
    report.horizon = T;
    report.undirected = max_flow_over_time_value(network, T);
    const auto best = best_flow_orientation(network, T, space, options);
    report.oriented = best.value;
    report.witness = best.orientation;
    report.witness_mask = best.mask;
    report.ratio = ratio_of(report.undirected, *report.oriented);
    return report;
  }
  const QuickestTime und = quickest_transshipment_time(network);
  if (!und.feasible()) throw PreconditionError("supplies can never be routed in the undirected network");
  report.undirected = *und.ceil_infimum;
  report.undirected_integral_horizon = und.integral_horizon;
  const auto best = best_quickest_orientation(network, space, options);
  report.witness = best.orientation;
  report.witness_mask = best.mask;
  if (best.time) {
    report.oriented = Rational(*best.time);
    report.ratio = ratio_of(*report.oriented, report.undirected);
    report.oriented_integral_horizon =
        quickest_transshipment_time(apply_orientation(network, best.orientation)).integral_horizon;
  }
  return report;
}

PriceReport brute_force_best_orientation(const UndirectedNetwork& network, Objective objective,
                                         const SearchOptions& options) {
  check_cap(static_cast<std::size_t>(network.edge_count()), options);
  return best_orientation_in(network, objective, EnumerationSpace::all_edges(network), options);
}

// ---------------------------------------------------------------------------

SuperTerminalNetwork add_super_terminals(const UndirectedNetwork& network) {
  require_valid(network);
  SuperTerminalNetwork st;
  UndirectedBuilder b;
  for (NodeId v = 0; v < network.node_count(); ++v) b.add_node(network.node_name(v));
  auto fresh = [&](std::string name) {
    while (network.find_node(name)) name += "'";
    return name;
  };
  st.super_source = b.add_node(fresh("s*"));
  st.super_sink = b.add_node(fresh("t*"));
  for (const Edge& e : network.edges()) b.add_edge(e.tail, e.head, e.capacity, e.transit);
  st.original_edges = network.edge_count();
  for (NodeId v = 0; v < network.node_count(); ++v) {
    if (network.is_source(v)) {
      st.terminals.push_back(v);
      st.aux_edges.push_back(b.add_edge(st.super_source, v, Capacity::infinite(), 0));
    } else if (network.is_sink(v)) {
      st.terminals.push_back(v);
      st.aux_edges.push_back(b.add_edge(v, st.super_sink, Capacity::infinite(), 0));
    }
  }
  b.set_horizon(network.horizon());
  st.network = b.build();
  st.original_balances = network.balances();
  // Sum of capacities at the sources; falls back to B when infinite and is
  // never below B (B bounds every per-step rate of an optimal flow).
  const Rational B = network.total_supply();
  std::optional<Rational> u_sum = Rational(0);
  for (const Edge& e : network.edges()) {
    const int ends = (network.is_source(e.tail) ? 1 : 0) + (network.is_source(e.head) ? 1 : 0);
    if (ends == 0) continue;
    if (e.capacity.is_infinite()) {
      u_sum.reset();
      break;
    }
    *u_sum += e.capacity.value() * ends;
  }
  st.U = u_sum && *u_sum > B ? *u_sum : B;
  return st;
}

namespace {

DirectedNetwork bidirect(const SuperTerminalNetwork& st, const std::vector<Rational>& aux_caps) {
  const UndirectedNetwork& net = st.network;
  std::vector<Edge> arcs;
  for (EdgeId e = 0; e < st.original_edges; ++e) {
    const Edge& edge = net.edge(e);
    arcs.push_back(edge);
    arcs.push_back({edge.head, edge.tail, edge.capacity, edge.transit});
  }
  for (std::size_t i = 0; i < st.aux_edges.size(); ++i) {
    const Edge& edge = net.edge(st.aux_edges[i]);
    arcs.push_back({edge.tail, edge.head, Capacity(aux_caps.at(i)), 0});
  }
  return DirectedNetwork(net.node_names(), std::move(arcs), std::vector<Rational>(net.node_count()), net.horizon());
}

// Rational with bounded denominator closest from below (keeps iterates small).
Rational round_down(const Rational& q) {
  static const BigInt grid = BigInt(1) << 64;
  if (mpz_sizeinbase(q.get_den_mpz_t(), 2) <= 256) return q;
  Rational r(floor(Rational(q * grid)), grid);
  r.canonicalize();
  return r;
}

Rational abs_of(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

AuxiliaryFlow temporally_repeated_with_aux(const SuperTerminalNetwork& st, const std::vector<Rational>& aux_caps,
                                           Time T) {
  if (aux_caps.size() != st.terminals.size()) throw PreconditionError("one auxiliary capacity per terminal required");
  AuxiliaryFlow out;
  out.bidirected = bidirect(st, aux_caps);
  out.static_flow = max_temporally_repeated_static_flow(out.bidirected, st.super_source, st.super_sink, T);
  auto& x = out.static_flow.values;
  for (EdgeId e = 0; e < st.original_edges; ++e) {
    const Rational both = std::min(x[2 * e], x[2 * e + 1]);
    if (both > 0) {
      x[2 * e] -= both;
      x[2 * e + 1] -= both;
    }
  }
  out.repeated = temporally_repeated_from_static(out.static_flow, out.bidirected, st.super_source, st.super_sink, T);
  out.terminal_flow.assign(st.terminals.size(), 0);
  const EdgeId first_aux = 2 * st.original_edges;
  for (const auto& p : out.repeated.decomposition.paths) {
    const Rational amount = p.rate * (T - p.transit);
    out.value += amount;
    for (EdgeId a : {p.edges.front(), p.edges.back()}) {
      if (a >= first_aux) out.terminal_flow[a - first_aux] += amount;
    }
  }
  return out;
}

FixedPointResult fixed_point_capacity_iteration(const SuperTerminalNetwork& st, Time T,
                                                const FixedPointOptions& options) {
  if (options.max_iter < 1) throw PreconditionError("max_iter must be >= 1");
  if (options.tol <= 0) throw PreconditionError("tol must be > 0");
  if (options.damping <= 0 || options.damping > 1) throw PreconditionError("damping must lie in (0, 1]");
  const std::size_t k = st.terminals.size();
  FixedPointResult r;
  r.u.assign(k, st.U);
  std::vector<Rational> h(k);
  const auto evaluate = [&] {
    r.flow = temporally_repeated_with_aux(st, r.u, T);
    r.residual = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational& fv = r.flow.terminal_flow[i];
      const Rational bv = abs_of(st.original_balances[st.terminals[i]]);
      h[i] = fv == 0 ? st.U : std::min(st.U, Rational(bv / fv * r.u[i]));
      r.residual = std::max(r.residual, abs_of(r.u[i] - h[i]));
    }
  };
  for (int it = 1; it <= options.max_iter; ++it) {
    r.iterations = it;
    evaluate();
    if (r.residual <= options.tol) {
      // Damped steps only approach U, so close the gap before certifying.
      bool snapped = false;
      for (std::size_t i = 0; i < k; ++i) {
        if (h[i] == st.U && r.u[i] != st.U) {
          r.u[i] = st.U;
          snapped = true;
        }
      }
      if (snapped) evaluate();
      if (r.residual <= options.tol && fixed_point_certificate_holds(r, st, options.tol) &&
          balance_conditions_hold(r, st, options.tol)) {
        r.status = FixedPointStatus::converged;
        return r;
      }
    }
    if (it == options.max_iter) break;
    for (std::size_t i = 0; i < k; ++i) r.u[i] = round_down(r.u[i] + options.damping * (h[i] - r.u[i]));
  }
  r.status = FixedPointStatus::max_iter;
  return r;
}

bool fixed_point_certificate_holds(const FixedPointResult& r, const SuperTerminalNetwork& st, const Rational& tol) {
  for (std::size_t i = 0; i < st.terminals.size(); ++i) {
    const Rational bv = abs_of(st.original_balances[st.terminals[i]]);
    if (r.u[i] != st.U && abs_of(r.flow.terminal_flow[i] - bv) > tol) return false;
  }
  return true;
}

bool balance_conditions_hold(const FixedPointResult& r, const SuperTerminalNetwork& st, const Rational& tol) {
  for (std::size_t i = 0; i < st.terminals.size(); ++i) {
    const Rational bv = abs_of(st.original_balances[st.terminals[i]]);
    const Rational& fv = r.flow.terminal_flow[i];
    if (fv > bv + tol) return false;
    if (fv < bv - tol && r.u[i] != st.U) return false;
  }
  return true;
}

PartitionReport partition_report(const FixedPointResult& r, const SuperTerminalNetwork& st, Time T) {
  if (r.status != FixedPointStatus::converged) throw PreconditionError("partition report needs a converged fixed point");
  PartitionReport rep;
  std::vector<Rational> caps(st.terminals.size());
  for (std::size_t i = 0; i < st.terminals.size(); ++i) {
    const NodeId v = st.terminals[i];
    const Rational& b = st.original_balances[v];
    const bool infinite = r.u[i] == st.U;
    if (b > 0) {
      (infinite ? rep.partition.sources_infinite : rep.partition.sources_finite).push_back(v);
      if (!infinite) rep.supply_finite += b;
    } else {
      (infinite ? rep.partition.sinks_infinite : rep.partition.sinks_finite).push_back(v);
      if (!infinite) rep.demand_finite -= b;
    }
    caps[i] = infinite ? st.U : Rational(0);
  }
  rep.restricted_value = temporally_repeated_with_aux(st, caps, T).value;
  rep.bound = std::max({rep.supply_finite, rep.demand_finite, rep.restricted_value});
  return rep;
}

namespace {

Orientation orientation_from_usage(const UndirectedNetwork& network, const std::vector<char>& forward,
                                   const std::vector<char>& backward) {
  Orientation o = Orientation::canonical(network);
  for (EdgeId e = 0; e < network.edge_count(); ++e) {
    const Edge& edge = network.edge(e);
    if (forward[e] && backward[e]) {
      throw PreconditionError("edge " + std::to_string(e) + " carries flow in both directions");
    }
    if (forward[e]) o.set(e, edge.tail, edge.head);
    if (backward[e]) o.set(e, edge.head, edge.tail);
  }
  return o;
}

// Temporally repeated flow on the bidirected network with the auxiliary arcs
// dropped, expressed on the original edge ids.
FlowOverTime cut_auxiliary(const TemporallyRepeatedFlow& trf, const DirectedNetwork& bidirected, EdgeId original_edges,
                           Time horizon, const Rational& factor) {
  FlowOverTime f(horizon, original_edges);
  for (const auto& p : trf.decomposition.paths) {
    Time offset = 0;
    for (EdgeId a : p.edges) {
      if (a < 2 * original_edges) f.add(a / 2, offset, offset + horizon - p.transit, p.rate * factor);
      offset += bidirected.edge(a).transit;
    }
  }
  return f;
}

}  // namespace

Orientation orientation_from_flow(const UndirectedNetwork& network, const StaticFlow& bidirected_flow) {
  const EdgeId m = network.edge_count();
  if (static_cast<EdgeId>(bidirected_flow.values.size()) < 2 * m) {
    throw PreconditionError("bidirected flow too short for network");
  }
  std::vector<char> fwd(m), bwd(m);
  for (EdgeId e = 0; e < m; ++e) {
    fwd[e] = bidirected_flow.values[2 * e] > 0;
    bwd[e] = bidirected_flow.values[2 * e + 1] > 0;
  }
  return orientation_from_usage(network, fwd, bwd);
}

Orientation orientation_from_flow(const UndirectedNetwork& network, const TemporallyRepeatedFlow& bidirected_flow) {
  const EdgeId m = network.edge_count();
  std::vector<char> fwd(m), bwd(m);
  for (const auto& p : bidirected_flow.decomposition.paths) {
    for (EdgeId a : p.edges) {
      if (a >= 2 * m) continue;
      (a % 2 == 0 ? fwd : bwd)[a / 2] = 1;
    }
  }
  return orientation_from_usage(network, fwd, bwd);
}

namespace {

void require_full_supply(const UndirectedNetwork& network, Time T) {
  if (T < 0) throw PreconditionError("negative horizon");
  const Rational B = network.total_supply();
  const Rational v = max_flow_over_time_value(network, T);
  if (v != B) {
    throw PreconditionError("undirected instance sends " + to_string(v) + " < B = " + to_string(B) + " within T = " +
                            std::to_string(T));
  }
}

}  // namespace

OneThirdResult orient_one_third(const UndirectedNetwork& network, Time T, const FixedPointOptions& options) {
  require_valid(network);
  require_full_supply(network, T);
  const SuperTerminalNetwork st = add_super_terminals(network);
  OneThirdResult res;
  res.fixed_point = fixed_point_capacity_iteration(st, T, options);
  const AuxiliaryFlow& af = res.fixed_point.flow;
  res.orientation = orientation_from_flow(network, af.repeated);
  // The iterate may overshoot a balance by up to tol; shrink all rates to fit.
  Rational scale = 1;
  for (std::size_t i = 0; i < st.terminals.size(); ++i) {
    const Rational& fv = af.terminal_flow[i];
    const Rational bv = abs_of(network.balance(st.terminals[i]));
    if (fv > bv) scale = std::min(scale, Rational(bv / fv));
  }
  res.flow = cut_auxiliary(af.repeated, af.bidirected, network.edge_count(), T, scale);
  res.flow_value = flow_value(res.flow, apply_orientation(network, res.orientation));
  if (res.fixed_point.status == FixedPointStatus::converged) {
    res.partition = partition_report(res.fixed_point, st, T);
    res.certified_value = max_flow_over_time_value(apply_orientation(network, res.orientation), T);
  }
  return res;
}

BicriteriaResult bicriteria_orient(const UndirectedNetwork& network, Time T) {
  require_valid(network);
  require_full_supply(network, T);
  const SuperTerminalNetwork st = add_super_terminals(network);
  BicriteriaResult res;
  res.horizon = 2 * T;
  const Rational B = network.total_supply();
  if (B == 0 || T == 0) {
    res.orientation = Orientation::canonical(network);
    res.oriented = apply_orientation(network, res.orientation).with_horizon(res.horizon);
    res.flow = FlowOverTime(res.horizon, network.edge_count());
    return res;
  }
  std::vector<Rational> caps;
  for (NodeId v : st.terminals) caps.push_back(abs_of(network.balance(v)) / T);
  const AuxiliaryFlow af = temporally_repeated_with_aux(st, caps, res.horizon);
  res.orientation = orientation_from_flow(network, af.repeated);
  res.oriented = apply_orientation(network, res.orientation).with_horizon(res.horizon);
  res.flow = cut_auxiliary(af.repeated, af.bidirected, network.edge_count(), res.horizon, Rational(1, 2));
  const auto report = check_feasibility(res.flow, res.oriented);
  if (!report.empty()) throw CertificateError("bicriteria flow failed re-verification: " + report.front());
  res.value = flow_value(res.flow, res.oriented);
  if (res.value * 2 < B) throw CertificateError("bicriteria flow value " + to_string(res.value) + " below B/2");
  return res;
}

// ---------------------------------------------------------------------------

namespace {

void require_cover(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p) {
  if (arrivals.empty()) throw PreconditionError("empty arrival curve");
  if (p.values.size() < arrivals.size()) throw PreconditionError("pattern domain shorter than the flow horizon");
}

}  // namespace

bool check_alpha_time_approx(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p,
                             const Rational& alpha) {
  require_cover(arrivals, p);
  if (alpha < 1) throw PreconditionError("alpha must be >= 1");
  for (std::size_t theta = 0; theta < arrivals.size(); ++theta) {
    const BigInt j = floor(Rational(Rational(static_cast<long>(theta)) / alpha));
    if (arrivals[theta] < p.values[j.get_ui()]) return false;
  }
  return true;
}

bool check_beta_value_approx(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p,
                             const Rational& beta) {
  require_cover(arrivals, p);
  if (beta < 1) throw PreconditionError("beta must be >= 1");
  for (std::size_t theta = 0; theta < arrivals.size(); ++theta) {
    if (arrivals[theta] * beta < p.values[theta]) return false;
  }
  return true;
}

bool check_alpha_time_approx(const FlowOverTime& f, const DirectedNetwork& network, const EarliestArrivalPattern& p,
                             const Rational& alpha) {
  return check_alpha_time_approx(arrival_curve(f, network), p, alpha);
}

bool check_beta_value_approx(const FlowOverTime& f, const DirectedNetwork& network, const EarliestArrivalPattern& p,
                             const Rational& beta) {
  return check_beta_value_approx(arrival_curve(f, network), p, beta);
}

AlphaThreshold minimal_alpha(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p) {
  require_cover(arrivals, p);
  // floor(theta/alpha) <= J(theta) <=> alpha > theta / (J(theta) + 1), where
  // J(theta) is the last grid point whose pattern value the flow has reached.
  Rational inf = 1;
  for (std::size_t theta = 0; theta < arrivals.size(); ++theta) {
    std::size_t j = 0;
    while (j + 1 <= theta && p.values[j + 1] <= arrivals[theta]) ++j;
    if (j >= theta) continue;
    inf = std::max(inf, Rational(Rational(static_cast<long>(theta)) / static_cast<long>(j + 1)));
  }
  return {inf, check_alpha_time_approx(arrivals, p, inf)};
}

std::optional<Rational> minimal_beta(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p) {
  require_cover(arrivals, p);
  Rational beta = 1;
  for (std::size_t theta = 0; theta < arrivals.size(); ++theta) {
    if (p.values[theta] == 0) continue;
    if (arrivals[theta] == 0) return std::nullopt;
    beta = std::max(beta, Rational(p.values[theta] / arrivals[theta]));
  }
  return beta;
}

EafExperiment eaf_contraflow_experiment(const UndirectedNetwork& network, Time T_max, const SearchOptions& options) {
  require_valid(network);
  check_cap(static_cast<std::size_t>(network.edge_count()), options);
  EafExperiment ex;
  const int jobs = resolve_jobs(options.jobs);
  ex.undirected = options.parallel ? earliest_arrival_pattern(network, T_max, jobs)
                                   : earliest_arrival_pattern_serial(network, T_max);
  const std::uint64_t count = std::uint64_t{1} << network.edge_count();
  ex.rows.resize(count);
  const ScaledNetwork base = ScaledNetwork::from_declared(network);
  auto fill = [&](std::uint64_t mask) {
    EafRow& row = ex.rows[mask];
    row.mask = mask;
    row.orientation = Orientation::from_mask(network, mask);
    const ScaledNetwork s = base.flipped(mask);
    for (Time theta = 0; theta <= T_max; ++theta) row.arrivals.push_back(time_expanded_value(s, theta));
    row.alpha = minimal_alpha(row.arrivals, ex.undirected);
    row.beta = minimal_beta(row.arrivals, ex.undirected);
  };
  if (options.parallel && jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(count); ++m) fill(static_cast<std::uint64_t>(m));
  } else {
    for (std::uint64_t m = 0; m < count; ++m) fill(m);
  }
  auto alpha_key_less = [](const AlphaThreshold& a, const AlphaThreshold& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.attained && !b.attained;
  };
  auto beta_less = [](const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return false;
    if (!b) return true;
    return *a < *b;
  };
  for (std::size_t i = 1; i < ex.rows.size(); ++i) {
    if (alpha_key_less(ex.rows[i].alpha, ex.rows[ex.best_alpha_row].alpha)) ex.best_alpha_row = i;
    if (beta_less(ex.rows[i].beta, ex.rows[ex.best_beta_row].beta)) ex.best_beta_row = i;
  }
  return ex;
}

}  // namespace tempoflow
