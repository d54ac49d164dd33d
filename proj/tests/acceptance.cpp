// Acceptance suite: one PASS/FAIL line per criterion. Every criterion also
// writes its exact results to <out>/run1/cN.json; criterion 11 recomputes
// 1-10 into <out>/run2 and compares the files byte for byte.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "tempoflow/generators.hpp"
#include "tempoflow/instance_io.hpp"
#include "tempoflow/orientation.hpp"
#include "tempoflow/reductions.hpp"
#include "tempoflow/report_io.hpp"
#include "tempoflow/static_flow.hpp"
#include "tempoflow/temporal.hpp"

namespace fs = std::filesystem;
using namespace tempoflow;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
  Json result;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(3);
  os << s << "s";
  return os.str();
}

std::string str(const std::optional<Rational>& q) { return q ? to_string(*q) : "inf"; }

// 1. Temporally repeated optimum equals the time-expanded optimum.
Outcome criterion1() {
  const auto start = Clock::now();
  tftest::Rng rng(1001);
  tftest::RandomShape shape{.max_nodes = 8, .max_edges = 14, .max_transit = 4, .max_capacity = 4};
  Outcome o;
  o.result = Json::array();
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const auto net = tftest::random_st_directed(rng, shape, true);
    const NodeId t = net.node_count() - 1;
    const Time T = tftest::uniform(rng, 0, 8);
    const auto x = max_temporally_repeated_static_flow(net, 0, t, T);
    const Rational repeated = temporally_repeated_from_static(x, net, 0, t, T).value();
    const Rational expanded = max_flow_over_time_value(net, T);
    if (repeated != expanded) ++mismatches;
    o.result.push_back({{"n", net.node_count()}, {"m", net.edge_count()}, {"T", T},
                        {"repeated", to_string(repeated)}, {"expanded", to_string(expanded)}});
  }
  const double secs = seconds_since(start);
  o.pass = mismatches == 0 && secs <= 60;
  o.detail = "200 instances, " + std::to_string(mismatches) + " mismatches, " + fmt_seconds(secs) + " (limit 60s)";
  return o;
}

// 2. Single source, single sink: some orientation is as good as undirected.
Outcome criterion2() {
  tftest::Rng rng(2002);
  tftest::RandomShape shape{.max_nodes = 6, .max_edges = 10, .max_transit = 3, .max_capacity = 3};
  Outcome o;
  o.result = Json::array();
  int bad = 0;
  for (int i = 0; i < 100; ++i) {
    const Time T = tftest::uniform(rng, 1, 6);
    const auto net = tftest::random_st_undirected(rng, shape, tftest::uniform(rng, 1, 5)).with_horizon(T);
    const auto r = brute_force_best_orientation(net, Objective::flow_at_horizon);
    if (!r.oriented || *r.oriented != r.undirected) ++bad;
    o.result.push_back({{"m", net.edge_count()}, {"T", T}, {"undirected", to_string(r.undirected)},
                        {"oriented", str(r.oriented)}, {"mask", r.witness_mask}});
  }
  o.pass = bad == 0;
  o.detail = "100 instances, " + std::to_string(bad) + " with oriented != undirected";
  return o;
}

// 3. B/3 in general, B/2 with a single source or a single sink.
Outcome criterion3() {
  tftest::Rng rng(3003);
  tftest::RandomShape shape{.max_nodes = 7, .max_edges = 10, .max_transit = 3, .max_capacity = 3};
  Outcome o;
  o.result = Json::array();
  int general = 0, single = 0, bad = 0;
  Rational worst = 1;
  for (int i = 0; general + single < 100; ++i) {
    const int sources = 1 + i % 3;
    const int sinks = 1 + (i / 3) % 3;
    const auto raw = tftest::random_multi_terminal(rng, shape, sources, sinks);
    const auto q = quickest_transshipment_time(raw);
    if (!q.integral_horizon) continue;
    const Time T = *q.integral_horizon;
    const auto net = raw.with_horizon(T);
    const Rational B = net.total_supply();
    const auto r = brute_force_best_orientation(net, Objective::flow_at_horizon);
    const Rational best = r.oriented.value_or(0);
    const bool one_sided = sources == 1 || sinks == 1;
    const Rational bound = one_sided ? B / 2 : B / 3;
    if (r.undirected != B || best < bound) ++bad;
    worst = std::min(worst, Rational(best / B));
    (one_sided ? single : general)++;
    o.result.push_back({{"sources", sources}, {"sinks", sinks}, {"T", T}, {"B", to_string(B)},
                        {"oriented", to_string(best)}, {"bound", to_string(bound)}});
  }
  o.pass = bad == 0;
  o.detail = std::to_string(general) + " general (>= B/3), " + std::to_string(single) +
             " single-source/sink (>= B/2), " + std::to_string(bad) + " violations, worst ratio oriented/B = " +
             to_string(worst);
  return o;
}

// 4. Flow price on the lower-bound family grows with T.
Outcome criterion4() {
  struct Case {
    Time T;
    Rational delta;
    Rational threshold;
    Rational frozen;  // brute-force value from the first run
  };
  const std::vector<Case> cases{{8, Rational(1, 4), 2, Rational(24, 13)},
                                {16, Rational(1, 8), Rational(12, 5), Rational(16, 7)},
                                {32, Rational(1, 16), Rational(13, 5), Rational(96, 37)}};
  const auto start = Clock::now();
  Outcome o;
  o.result = Json::array();
  bool increasing = true, above = true, regression = true;
  std::optional<Rational> prev;
  std::string values;
  for (const auto& c : cases) {
    const auto net = gen_flow_price_lb(c.T, c.delta, 1);
    const auto r = brute_force_best_orientation(net, Objective::flow_at_horizon);
    const Rational ratio = r.ratio.value_or(0);
    if (prev && !(ratio > *prev)) increasing = false;
    if (!(ratio > c.threshold)) above = false;
    if (ratio != c.frozen) regression = false;
    prev = ratio;
    values += (values.empty() ? "" : ", ") + to_string(ratio) + " (need > " + to_string(c.threshold) + ")";
    o.result.push_back({{"T", c.T}, {"delta", to_string(c.delta)}, {"undirected", to_string(r.undirected)},
                        {"oriented", str(r.oriented)}, {"ratio", to_string(ratio)}, {"mask", r.witness_mask}});
  }
  const double secs = seconds_since(start);
  o.pass = increasing && above && regression && secs <= 300;
  o.detail = std::string("ratios ") + values + "; increasing=" + (increasing ? "yes" : "no") +
             ", thresholds=" + (above ? "met" : "missed") + ", frozen=" + (regression ? "match" : "changed") + ", " +
             fmt_seconds(secs);
  return o;
}

struct FamilyInstance {
  std::string name;
  UndirectedNetwork network;
};

std::vector<FamilyInstance> family_instances() {
  std::vector<FamilyInstance> out{
      {"fig1", gen_fig1(4)},
      {"flow-lb(8)", gen_flow_price_lb(8, Rational(1, 4), 1)},
      {"flow-lb(16)", gen_flow_price_lb(16, Rational(1, 8), 1)},
      {"single-sink-lb", gen_single_sink_lb(8, Rational(1, 4))},
      {"single-source-lb", gen_single_source_lb(8, Rational(1, 4))},
      {"time-lb-sink", gen_time_price_single_sink(2, 2)},
      {"time-lb-source", gen_time_price_single_source(2, 2)},
      {"time-lb-tree", gen_time_price_tree(2, 2)},
      {"unit-tree", gen_unit_capacity_tree(3, 2)},
      {"eaf", gen_eaf(36, 4)},
      {"partition-max", reduce_partition_maxfot(make_partition({1, 1, 2}))},
      {"sat-quickest", reduce_3sat_quickest(parse_dimacs("p cnf 3 1\n1 2 -3 0\n"), 2, 1).network},
  };
  return out;
}

// 5. Bicriteria: B/2 within 2T.
Outcome criterion5() {
  Outcome o;
  o.result = Json::array();
  int bad = 0;
  double slowest = 0;
  for (const auto& [name, net] : family_instances()) {
    const Rational B = net.total_supply();
    Time T = 0;
    if (net.horizon() && max_flow_over_time_value(net, *net.horizon()) == B) {
      T = *net.horizon();
    } else {
      T = *quickest_transshipment_time(net).integral_horizon;
    }
    const auto start = Clock::now();
    const auto r = bicriteria_orient(net, T);
    const double secs = seconds_since(start);
    slowest = std::max(slowest, secs);
    const bool ok = r.value >= B / 2 && r.horizon <= 2 * T && check_feasibility(r.flow, r.oriented).empty() &&
                    flow_value(r.flow, r.oriented) == r.value && net.node_count() <= 50 && secs <= 1.0;
    if (!ok) ++bad;
    o.result.push_back({{"family", name}, {"n", net.node_count()}, {"T", T}, {"B", to_string(B)},
                        {"value", to_string(r.value)}, {"horizon", r.horizon}});
  }
  o.pass = bad == 0;
  o.detail = std::to_string(o.result.size()) + " family instances, " + std::to_string(bad) +
             " failures, slowest " + fmt_seconds(slowest) + " (limit 1s)";
  return o;
}

// 6. Price of time on the time families.
Outcome criterion6() {
  Outcome o;
  const auto sink = brute_force_best_orientation(gen_time_price_single_sink(2, 2), Objective::quickest);
  const auto tree = brute_force_best_orientation(gen_unit_capacity_tree(2, 2), Objective::quickest);
  const bool a = sink.undirected == 3 && sink.oriented && *sink.oriented >= 4;
  const bool b = tree.undirected == 3 && tree.oriented && *tree.oriented >= 5;
  o.pass = a && b;
  o.detail = "time-lb-sink undirected " + to_string(sink.undirected) + " oriented " + str(sink.oriented) +
             "; unit-tree undirected " + to_string(tree.undirected) + " oriented " + str(tree.oriented);
  o.result = {{"time_lb_sink", {{"undirected", to_string(sink.undirected)}, {"oriented", str(sink.oriented)},
                                {"mask", sink.witness_mask}}},
              {"unit_tree", {{"undirected", to_string(tree.undirected)}, {"oriented", str(tree.oriented)},
                             {"mask", tree.witness_mask}}}};
  return o;
}

Json report_json(const ReductionReport& r) {
  return {{"kind", r.kind},          {"yes", r.yes_instance},   {"expected", to_string(r.expected)},
          {"measured", str(r.measured)}, {"full", r.cross_check ? Json(to_string(*r.cross_check)) : Json(nullptr)},
          {"mask", r.mask}};
}

// 7. Hardness gaps of the partition and 3-SAT quickest reductions.
Outcome criterion7() {
  const auto start = Clock::now();
  const auto yes_p = verify_partition_maxfot(make_partition({1, 1, 2}));
  const auto no_p = verify_partition_maxfot(make_partition({1, 1, 4}));
  const auto yes_s = verify_sat_quickest(parse_dimacs("p cnf 3 1\n1 2 3 0\n"), 2, 0, false, false);
  SearchOptions full;
  full.max_edges = 18;
  const auto no_s = verify_sat_quickest(parse_dimacs("p cnf 1 2\n1 1 1 0\n-1 -1 -1 0\n"), 2, 0, false, true, full);
  const double secs = seconds_since(start);
  const bool p_ok = yes_p.measured == Rational(2) && no_p.measured == Rational(1);
  const bool s_yes = yes_s.measured == Rational(2);
  const bool s_no = no_s.measured && *no_s.measured >= 4 && no_s.cross_check && *no_s.cross_check >= 4;
  Outcome o;
  o.pass = p_ok && s_yes && s_no && secs <= 600;
  o.detail = "partition (1,1,2) -> " + str(yes_p.measured) + ", (1,1,4) -> " + str(no_p.measured) +
             "; sat YES -> " + str(yes_s.measured) + ", NO restricted -> " + str(no_s.measured) + ", NO full 2^18 -> " +
             str(no_s.cross_check) + "; " + fmt_seconds(secs);
  o.result = Json::array({report_json(yes_p), report_json(no_p), report_json(yes_s), report_json(no_s)});
  return o;
}

// 8. Concurrent multicommodity gap.
Outcome criterion8() {
  const auto yes = verify_sat_concurrent(parse_dimacs("p cnf 3 1\n1 2 -3 0\n"));
  const auto no = verify_sat_concurrent(parse_dimacs(
      "p cnf 3 8\n1 2 3 0\n1 2 -3 0\n1 -2 3 0\n1 -2 -3 0\n-1 2 3 0\n-1 2 -3 0\n-1 -2 3 0\n-1 -2 -3 0\n"));
  Outcome o;
  o.pass = yes.measured && *yes.measured >= Rational(1, 3) && no.measured == Rational(0);
  o.detail = "YES assignment orientation lambda = " + str(yes.measured) +
             ", NO best lambda over all variable-edge orientations = " + str(no.measured);
  o.result = Json::array({report_json(yes), report_json(no)});
  return o;
}

// 9. No orientation is an alpha = 2 or beta = 2 earliest arrival approximation.
Outcome criterion9() {
  const Time T = 4;
  const auto net = gen_eaf(36, T);
  const auto ex = eaf_contraflow_experiment(net, 3 * T);
  int alpha_pass = 0, beta_pass = 0;
  Outcome o;
  o.result = {{"pattern", pattern_json(ex.undirected)}, {"rows", Json::array()}};
  for (const auto& row : ex.rows) {
    const bool a = check_alpha_time_approx(row.arrivals, ex.undirected, 2);
    const bool b = check_beta_value_approx(row.arrivals, ex.undirected, 2);
    alpha_pass += a ? 1 : 0;
    beta_pass += b ? 1 : 0;
    Json arr = Json::array();
    for (const auto& v : row.arrivals) arr.push_back(to_string(v));
    o.result["rows"].push_back({{"mask", row.mask}, {"arrivals", arr}, {"alpha", to_string(row.alpha.value)},
                                {"beta", str(row.beta)}, {"alpha2", a}, {"beta2", b}});
  }
  const auto& best = ex.rows[ex.best_alpha_row];
  o.pass = alpha_pass == 0 && beta_pass == 0;
  o.detail = std::to_string(ex.rows.size()) + " orientations; alpha=2 passes on " + std::to_string(alpha_pass) +
             ", beta=2 passes on " + std::to_string(beta_pass) + "; best alpha " + to_string(best.alpha.value) +
             " (mask " + std::to_string(best.mask) + "), best beta " + str(ex.rows[ex.best_beta_row].beta);
  return o;
}

// 10. Fixed-point certificate and the resulting B/3 orientation.
Outcome criterion10() {
  FixedPointOptions opts;
  opts.max_iter = 200;
  opts.tol = Rational(1, 1000000);
  Outcome o;
  o.result = Json::array();
  bool ok = true;
  std::string detail;
  for (const auto& [name, net, T] : std::vector<std::tuple<std::string, UndirectedNetwork, Time>>{
           {"fig1", gen_fig1(4), 4}, {"flow-lb", gen_flow_price_lb(8, Rational(1, 4), 1), 9}}) {
    const auto st = add_super_terminals(net);
    const auto fp = fixed_point_capacity_iteration(st, T, opts);
    const bool converged = fp.status == FixedPointStatus::converged && fp.iterations <= 200;
    const bool certificate =
        converged && fixed_point_certificate_holds(fp, st, opts.tol) && balance_conditions_hold(fp, st, opts.tol);
    const auto one = orient_one_third(net, T, opts);
    const Rational B = net.total_supply();
    const bool third = one.certified_value && *one.certified_value >= B / 3;
    ok = ok && converged && certificate && third;
    detail += (detail.empty() ? "" : "; ") + name + ": " + (converged ? "converged" : "not converged") + " in " +
              std::to_string(fp.iterations) + ", certificate " + (certificate ? "ok" : "violated") +
              ", certified " + str(one.certified_value) + " vs B/3 = " + to_string(B / 3);
    o.result.push_back({{"instance", name}, {"iterations", fp.iterations}, {"residual", to_string(fp.residual)},
                        {"certified", str(one.certified_value)},
                        {"orientation", orientation_json(net, one.orientation)}});
  }
  o.pass = ok;
  o.detail = detail;
  return o;
}

const std::vector<std::function<Outcome()>>& criteria() {
  static const std::vector<std::function<Outcome()>> list{criterion1, criterion2, criterion3, criterion4,
                                                          criterion5, criterion6, criterion7, criterion8,
                                                          criterion9, criterion10};
  return list;
}

fs::path result_file(const fs::path& dir, std::size_t n) { return dir / ("c" + std::to_string(n) + ".json"); }

Outcome run_and_store(std::size_t n, const fs::path& dir) {
  Outcome o = criteria()[n - 1]();
  fs::create_directories(dir);
  write_text_file(result_file(dir, n), dump(o.result));
  return o;
}

// 11. Recompute everything twice and compare the stored results.
Outcome criterion11(const fs::path& out) {
  int differing = 0;
  std::string which;
  for (std::size_t n = 1; n <= criteria().size(); ++n) {
    run_and_store(n, out / "run1");
    run_and_store(n, out / "run2");
    if (read_text_file(result_file(out / "run1", n)) != read_text_file(result_file(out / "run2", n))) {
      ++differing;
      which += " c" + std::to_string(n);
    }
  }
  Outcome o;
  o.pass = differing == 0;
  o.detail = std::to_string(criteria().size()) + " result files compared, " + std::to_string(differing) +
             " differ" + which;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path out = "acceptance_out";
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--out" && i + 1 < argc) {
      out = argv[++i];
    } else if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: tempoflow_acceptance [--out DIR] [--only N]\n";
      return 2;
    }
  }
  bool all_pass = true;
  for (int n = 1; n <= 11; ++n) {
    if (only != 0 && only != n) continue;
    Outcome o;
    try {
      o = n == 11 ? criterion11(out) : run_and_store(static_cast<std::size_t>(n), out / "run1");
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "CRITERION " << n << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
