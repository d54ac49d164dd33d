#include "tempoflow/reductions.hpp"

#include <set>
#include <string>

#include "tempoflow/errors.hpp"
#include "tempoflow/multicommodity.hpp"
#include "tempoflow/parallel.hpp"

namespace tempoflow {

Orientation SatReduction::assignment_orientation(std::uint64_t assignment) const {
  Orientation o = restricted.base;
  for (std::size_t i = 0; i < positive_literal_edges.size(); ++i) {
    const bool value = (assignment >> i) & 1U;
    const Edge& pos = network.edge(positive_literal_edges[i]);  // declared x1 -> x2
    const Edge& neg = network.edge(negative_literal_edges[i]);  // declared ~x1 -> ~x2
    if (value) {
      o.set(positive_literal_edges[i], pos.tail, pos.head);
      o.set(negative_literal_edges[i], neg.head, neg.tail);
    } else {
      o.set(positive_literal_edges[i], pos.head, pos.tail);
      o.set(negative_literal_edges[i], neg.tail, neg.head);
    }
  }
  return o;
}

std::uint64_t SatReduction::assignment_mask(std::uint64_t assignment) const {
  const Orientation target = assignment_orientation(assignment);
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < restricted.free_edges.size(); ++i) {
    const EdgeId e = restricted.free_edges[i];
    if (target.arc(e) != restricted.base.arc(e)) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

namespace {

struct LiteralBlock {
  NodeId x1, x2, nx1, nx2;
  NodeId first(const Literal& lit) const { return lit.negated ? nx1 : x1; }
  NodeId second(const Literal& lit) const { return lit.negated ? nx2 : x2; }
};

std::string var_name(const char* prefix, int i, const char* suffix = "") {
  return std::string(prefix) + std::to_string(i) + suffix;
}

// Base orientation pointing every edge along its declared order; generators
// below declare all fixed edges away from sources / towards sinks and literal
// edges as x1 -> x2.
SatReduction finish(UndirectedBuilder& b, std::vector<EdgeId> free_edges, std::vector<EdgeId> pos,
                    std::vector<EdgeId> neg) {
  SatReduction r;
  r.network = b.build();
  require_valid(r.network);
  r.restricted.base = Orientation::from_mask(r.network, 0);
  r.restricted.free_edges = std::move(free_edges);
  r.positive_literal_edges = std::move(pos);
  r.negative_literal_edges = std::move(neg);
  return r;
}

}  // namespace

SatReduction reduce_3sat_quickest(const CnfFormula& formula, Time tau1, Time tau2, bool widen) {
  require_valid(formula);
  if (tau1 <= 0) throw PreconditionError("tau1 must be > 0");
  if (tau2 < 0) throw PreconditionError("tau2 must be >= 0");
  const Capacity inf = Capacity::infinite();
  UndirectedBuilder b;
  std::vector<LiteralBlock> blocks(formula.variables + 1);
  std::vector<NodeId> s(formula.variables + 1), t(formula.variables + 1);
  for (int i = 1; i <= formula.variables; ++i) {
    blocks[i] = {b.add_node(var_name("x", i, ".1")), b.add_node(var_name("x", i, ".2")),
                 b.add_node(var_name("~x", i, ".1")), b.add_node(var_name("~x", i, ".2"))};
    s[i] = b.add_node(var_name("s", i), 1);
    t[i] = b.add_node(var_name("t", i), -1);
  }
  std::vector<EdgeId> free_edges, pos, neg;
  for (int i = 1; i <= formula.variables; ++i) {
    const LiteralBlock& L = blocks[i];
    pos.push_back(b.add_edge(L.x1, L.x2, inf, tau2));
    neg.push_back(b.add_edge(L.nx1, L.nx2, inf, tau2));
    free_edges.push_back(pos.back());
    free_edges.push_back(neg.back());
    const EdgeId sa = b.add_edge(s[i], L.x2, inf, tau2);
    const EdgeId sb = b.add_edge(s[i], L.nx2, inf, tau2);
    if (widen) {
      free_edges.push_back(sa);
      free_edges.push_back(sb);
    }
    b.add_edge(L.x1, t[i], inf, tau1);
    b.add_edge(L.nx1, t[i], inf, tau1);
  }
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    const int c = static_cast<int>(j) + 1;
    const NodeId cp = b.add_node(var_name("c", c, "+"), 1);
    const NodeId cm = b.add_node(var_name("c", c, "-"), -1);
    for (const Literal& lit : formula.clauses[j]) b.add_edge(cp, blocks[lit.variable].first(lit), inf, tau1);
    for (const Literal& lit : formula.clauses[j]) b.add_edge(blocks[lit.variable].second(lit), cm, inf, tau2);
  }
  return finish(b, std::move(free_edges), std::move(pos), std::move(neg));
}

UndirectedNetwork reduce_partition_maxfot(const PartitionInstance& p) {
  const PartitionInstance checked = make_partition(p.a);
  if (checked.L != p.L) throw PreconditionError("L does not equal half the sum");
  const auto n = static_cast<int>(p.a.size());
  const Capacity one(1);
  UndirectedBuilder b;
  const NodeId s1 = b.add_node("s1", 1);
  const NodeId s2 = b.add_node("s2", 1);
  const NodeId t1 = b.add_node("t1", -1);
  const NodeId t2 = b.add_node("t2", -1);
  std::vector<NodeId> v(n + 2);
  for (int i = 1; i <= n + 1; ++i) v[i] = b.add_node(var_name("v", i));
  for (int i = 1; i <= n; ++i) {
    b.add_edge(v[i], v[i + 1], one, p.a[i - 1]);
    b.add_edge(v[i], v[i + 1], one, 0);
  }
  b.add_edge(s1, v[1], one, p.L + 1);
  b.add_edge(v[1], t2, one, p.L + 1);
  b.add_edge(s2, v[n + 1], one, 0);
  b.add_edge(v[n + 1], t1, one, 0);
  b.set_horizon(2 * p.L + 2);
  return b.build();
}

SatReduction reduce_3sat_concurrent(const CnfFormula& formula) {
  require_valid(formula);
  for (std::size_t j = 0; j < formula.clauses.size(); ++j) {
    std::set<int> vars;
    for (const Literal& lit : formula.clauses[j]) vars.insert(lit.variable);
    if (vars.size() != 3) {
      throw PreconditionError("clause " + std::to_string(j + 1) + " repeats a variable");
    }
  }
  const int k = formula.variables;
  const auto l = static_cast<long>(formula.clauses.size());
  const Capacity cap{Rational(l)};
  UndirectedBuilder b;
  std::vector<NodeId> clause(l);
  for (long j = 0; j < l; ++j) clause[j] = b.add_node(var_name("c", static_cast<int>(j + 1)));
  struct Block {
    LiteralBlock lit;
    NodeId xm, nxm, dm, ndm, dp;
  };
  std::vector<Block> blocks(k + 1);
  for (int i = 1; i <= k; ++i) {
    Block& B = blocks[i];
    B.lit = {b.add_node(var_name("x", i, ".1")), b.add_node(var_name("x", i, ".2")),
             b.add_node(var_name("~x", i, ".1")), b.add_node(var_name("~x", i, ".2"))};
    B.xm = b.add_node(var_name("x", i, "-"));
    B.nxm = b.add_node(var_name("~x", i, "-"));
    B.dm = b.add_node(var_name("d", i, "-"));
    B.ndm = b.add_node(var_name("~d", i, "-"));
    B.dp = b.add_node(var_name("d", i, "+"));
  }
  const NodeId n = b.node_count();
  std::vector<EdgeId> free_edges, pos, neg;
  for (long j = 0; j < l; ++j) {
    for (const Literal& lit : formula.clauses[j]) b.add_edge(clause[j], blocks[lit.variable].lit.first(lit), cap, 0);
  }
  CommoditySet commodities;
  for (int i = 1; i <= k; ++i) {
    const Block& B = blocks[i];
    b.add_edge(B.dp, B.lit.x2, cap, 0);
    b.add_edge(B.dp, B.lit.nx2, cap, 0);
    b.add_edge(B.lit.x1, B.dm, cap, 0);
    b.add_edge(B.lit.nx1, B.ndm, cap, 0);
    b.add_edge(B.lit.x2, B.xm, cap, 0);
    b.add_edge(B.lit.nx2, B.nxm, cap, 0);
    pos.push_back(b.add_edge(B.lit.x1, B.lit.x2, cap, 0));
    neg.push_back(b.add_edge(B.lit.nx1, B.lit.nx2, cap, 0));
    free_edges.push_back(pos.back());
    free_edges.push_back(neg.back());
    Commodity c{i - 1, std::vector<Rational>(n)};
    c.balances[B.dp] = 2;
    c.balances[B.dm] = -1;
    c.balances[B.ndm] = -1;
    commodities.commodities.push_back(std::move(c));
  }
  for (long j = 0; j < l; ++j) {
    Commodity c{k + static_cast<int>(j), std::vector<Rational>(n)};
    c.balances[clause[j]] = 3;
    for (const Literal& lit : formula.clauses[j]) {
      c.balances[lit.negated ? blocks[lit.variable].nxm : blocks[lit.variable].xm] = -1;
    }
    commodities.commodities.push_back(std::move(c));
  }
  SatReduction r = finish(b, std::move(free_edges), std::move(pos), std::move(neg));
  r.commodities = std::move(commodities);
  return r;
}

SatReduction reduce_3sat_mc_quickest(const CnfFormula& formula, const BigInt& C) {
  require_valid(formula);
  const int k = formula.variables;
  const auto l = static_cast<long>(formula.clauses.size());
  if (C < l) throw PreconditionError("C must be >= number of clauses");
  // C(C+1) is a product of consecutive integers, so the half is integral.
  const Rational half_demand(BigInt(C * C + C) / 2);
  const Capacity cap_hat{Rational(C * C)};
  const Capacity cap_block{Rational(C)};
  const Capacity cap_enter{Rational(1)};
  const Capacity cap_sink{Rational(l)};
  UndirectedBuilder b;
  const NodeId sink = b.add_node("c-");
  std::vector<NodeId> clause(l);
  for (long j = 0; j < l; ++j) clause[j] = b.add_node(var_name("c", static_cast<int>(j + 1)));
  struct Block {
    LiteralBlock lit;
    NodeId dm, ndm, dp, dhat;
  };
  std::vector<Block> blocks(k + 1);
  for (int i = 1; i <= k; ++i) {
    Block& B = blocks[i];
    B.lit = {b.add_node(var_name("x", i, ".1")), b.add_node(var_name("x", i, ".2")),
             b.add_node(var_name("~x", i, ".1")), b.add_node(var_name("~x", i, ".2"))};
    B.dm = b.add_node(var_name("d", i, "-"));
    B.ndm = b.add_node(var_name("~d", i, "-"));
    B.dp = b.add_node(var_name("d", i, "+"));
    B.dhat = b.add_node(var_name("^d", i, "+"));
  }
  const NodeId n = b.node_count();
  for (long j = 0; j < l; ++j) {
    for (const Literal& lit : formula.clauses[j]) {
      b.add_edge(clause[j], blocks[lit.variable].lit.first(lit), cap_enter, 0);
    }
  }
  std::vector<EdgeId> free_edges, pos, neg;
  CommoditySet commodities;
  for (int i = 1; i <= k; ++i) {
    const Block& B = blocks[i];
    b.add_edge(B.dp, B.lit.x2, cap_block, 0);
    b.add_edge(B.dp, B.lit.nx2, cap_block, 0);
    b.add_edge(B.lit.x1, B.dm, cap_block, 0);
    b.add_edge(B.lit.nx1, B.ndm, cap_block, 0);
    b.add_edge(B.lit.x2, sink, cap_sink, 0);
    b.add_edge(B.lit.nx2, sink, cap_sink, 0);
    pos.push_back(b.add_edge(B.lit.x1, B.lit.x2, cap_block, 0));
    neg.push_back(b.add_edge(B.lit.nx1, B.lit.nx2, cap_block, 0));
    b.add_edge(B.dhat, B.dm, cap_hat, 0);
    b.add_edge(B.dhat, B.ndm, cap_hat, 0);
    free_edges.push_back(pos.back());
    free_edges.push_back(neg.back());
    Commodity c{i - 1, std::vector<Rational>(n)};
    c.balances[B.dp] = Rational(C);
    c.balances[B.dhat] = Rational(C * C);
    c.balances[B.dm] = -half_demand;
    c.balances[B.ndm] = -half_demand;
    commodities.commodities.push_back(std::move(c));
  }
  for (long j = 0; j < l; ++j) {
    Commodity c{k + static_cast<int>(j), std::vector<Rational>(n)};
    c.balances[clause[j]] = 1;
    c.balances[sink] = -1;
    commodities.commodities.push_back(std::move(c));
  }
  SatReduction r = finish(b, std::move(free_edges), std::move(pos), std::move(neg));
  r.commodities = std::move(commodities);
  return r;
}

// ---------------------------------------------------------------------------

std::string to_string(Relation r) {
  switch (r) {
    case Relation::equal:
      return "==";
    case Relation::at_least:
      return ">=";
    case Relation::at_most:
      return "<=";
  }
  return "?";
}

namespace {

// f(mask) for every mask of the restricted space, in mask order.
template <class R, class F>
std::vector<R> evaluate_all(const SatReduction& r, const SearchOptions& options, F f) {
  const std::size_t k = r.restricted.free_edges.size();
  if (k > static_cast<std::size_t>(options.max_edges) || k > 62) {
    throw CapExceededError("restricted enumeration over " + std::to_string(k) + " edges exceeds cap");
  }
  const std::uint64_t count = std::uint64_t{1} << k;
  std::vector<R> out(count);
  const int jobs = resolve_jobs(options.jobs);
  if (options.parallel && jobs > 1) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(count); ++m) out[m] = f(static_cast<std::uint64_t>(m));
  } else {
    for (std::uint64_t m = 0; m < count; ++m) out[m] = f(m);
  }
  return out;
}

bool holds(Relation rel, const std::optional<Rational>& measured, const Rational& expected) {
  if (!measured) return rel == Relation::at_least;  // infinite time
  switch (rel) {
    case Relation::equal:
      return *measured == expected;
    case Relation::at_least:
      return *measured >= expected;
    case Relation::at_most:
      return *measured <= expected;
  }
  return false;
}

}  // namespace

ConcurrentSearchResult best_concurrent_orientation(const SatReduction& r, const SearchOptions& options) {
  const auto values = evaluate_all<Rational>(r, options, [&](std::uint64_t mask) {
    return max_concurrent_value(apply_orientation(r.network, r.restricted.orientation(mask)), r.commodities);
  });
  ConcurrentSearchResult best{values[0], 0};
  for (std::uint64_t m = 1; m < values.size(); ++m) {
    if (values[m] > best.value) best = {values[m], m};
  }
  return best;
}

McQuickestSearchResult best_mc_quickest_orientation(const SatReduction& r, const SearchOptions& options) {
  const auto times = evaluate_all<std::optional<Rational>>(r, options, [&](std::uint64_t mask) {
    return quickest_multicommodity_time(apply_orientation(r.network, r.restricted.orientation(mask)), r.commodities)
        .time;
  });
  McQuickestSearchResult best{times[0], 0};
  for (std::uint64_t m = 1; m < times.size(); ++m) {
    if (times[m] && (!best.time || *times[m] < *best.time)) best = {times[m], m};
  }
  return best;
}

ReductionReport verify_partition_maxfot(const PartitionInstance& p, const SearchOptions& options) {
  const UndirectedNetwork net = reduce_partition_maxfot(p);
  ReductionReport rep;
  rep.kind = "partition-max";
  rep.yes_instance = has_partition(p);
  rep.relation = Relation::equal;
  rep.expected = rep.yes_instance ? 2 : 1;
  const auto best = best_flow_orientation(net, *net.horizon(), EnumerationSpace::all_edges(net), options);
  rep.measured = best.value;
  rep.mask = best.mask;
  rep.witness = best.orientation;
  rep.consistent = holds(rep.relation, rep.measured, rep.expected);
  return rep;
}

ReductionReport verify_sat_quickest(const CnfFormula& formula, Time tau1, Time tau2, bool widen, bool full,
                                    const SearchOptions& options) {
  const SatReduction r = reduce_3sat_quickest(formula, tau1, tau2, widen);
  ReductionReport rep;
  rep.kind = "sat-quickest";
  rep.yes_instance = satisfying_assignment(formula).has_value();
  rep.relation = rep.yes_instance ? Relation::at_most : Relation::at_least;
  rep.expected = rep.yes_instance ? Rational(tau1 + 2 * tau2) : Rational(2 * tau1);
  const auto best = best_quickest_orientation(r.network, r.restricted, options);
  if (best.time) rep.measured = Rational(*best.time);
  rep.mask = best.mask;
  rep.witness = best.orientation;
  rep.consistent = holds(rep.relation, rep.measured, rep.expected);
  if (full) {
    const auto all = best_quickest_orientation(r.network, EnumerationSpace::all_edges(r.network), options);
    if (all.time) rep.cross_check = Rational(*all.time);
    rep.consistent = rep.consistent && holds(rep.relation, rep.cross_check, rep.expected);
  }
  return rep;
}

ReductionReport verify_sat_concurrent(const CnfFormula& formula, const SearchOptions& options) {
  const SatReduction r = reduce_3sat_concurrent(formula);
  ReductionReport rep;
  rep.kind = "sat-concurrent";
  const auto assignment = satisfying_assignment(formula);
  rep.yes_instance = assignment.has_value();
  if (rep.yes_instance) {
    rep.relation = Relation::at_least;
    rep.expected = Rational(1, 3);
    rep.witness = r.assignment_orientation(*assignment);
    rep.mask = r.assignment_mask(*assignment);
    rep.measured = max_concurrent_value(apply_orientation(r.network, rep.witness), r.commodities);
  } else {
    rep.relation = Relation::equal;
    rep.expected = 0;
    const auto best = best_concurrent_orientation(r, options);
    rep.measured = best.value;
    rep.mask = best.mask;
    rep.witness = r.restricted.orientation(best.mask);
  }
  rep.consistent = holds(rep.relation, rep.measured, rep.expected);
  return rep;
}

ReductionReport verify_sat_mc_quickest(const CnfFormula& formula, const BigInt& C, const SearchOptions& options) {
  const SatReduction r = reduce_3sat_mc_quickest(formula, C);
  ReductionReport rep;
  rep.kind = "sat-mc-quickest";
  const auto assignment = satisfying_assignment(formula);
  rep.yes_instance = assignment.has_value();
  if (rep.yes_instance) {
    rep.relation = Relation::at_most;
    rep.expected = 1;
    rep.witness = r.assignment_orientation(*assignment);
    rep.mask = r.assignment_mask(*assignment);
    rep.measured = quickest_multicommodity_time(apply_orientation(r.network, rep.witness), r.commodities).time;
  } else {
    rep.relation = Relation::at_least;
    rep.expected = Rational(C, BigInt(2 * static_cast<long>(formula.clauses.size())));
    rep.expected.canonicalize();
    const auto best = best_mc_quickest_orientation(r, options);
    rep.measured = best.time;
    rep.mask = best.mask;
    rep.witness = r.restricted.orientation(best.mask);
  }
  rep.consistent = holds(rep.relation, rep.measured, rep.expected);
  return rep;
}

}  // namespace tempoflow
