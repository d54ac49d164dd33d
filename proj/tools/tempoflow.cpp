// tempoflow command-line front end.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tempoflow/errors.hpp"
#include "tempoflow/generators.hpp"
#include "tempoflow/instance_io.hpp"
#include "tempoflow/orientation.hpp"
#include "tempoflow/reductions.hpp"
#include "tempoflow/report_io.hpp"
#include "tempoflow/temporal.hpp"

namespace tf = tempoflow;
using tf::Json;

namespace {

struct Globals {
  int jobs = 0;
  std::string output;
  bool table = false;
  int max_edges = 20;
};

void emit(const Globals& g, const std::string& text) {
  if (g.output.empty()) {
    std::cout << text;
  } else {
    tf::write_text_file(g.output, text);
  }
}

tf::SearchOptions search_options(const Globals& g) {
  tf::SearchOptions o;
  o.jobs = g.jobs;
  o.max_edges = g.max_edges;
  return o;
}

tf::Time horizon_or(const std::optional<tf::Time>& given, const std::optional<tf::Time>& instance) {
  if (given) return *given;
  if (instance) return *instance;
  throw tf::PreconditionError("no horizon: pass --T or set \"horizon\" in the instance");
}

tf::BigInt parse_integer(const std::string& text, const char* what) {
  const tf::Rational q = tf::parse_rational(text);
  if (q.get_den() != 1) throw tf::PreconditionError(std::string(what) + " must be an integer");
  return q.get_num();
}

std::string opt_str(const std::optional<tf::Rational>& q) { return q ? tf::to_string(*q) : "inf"; }

// ---------------------------------------------------------------------------
// generate

struct GenerateArgs {
  std::string family;
  std::optional<tf::Time> T;
  std::optional<std::string> delta;
  std::optional<tf::Time> eps;
  std::optional<int> k;
  std::optional<std::string> U;
  std::optional<std::string> cnf;
  std::optional<std::string> partition;
  std::optional<tf::Time> tau1;
  std::optional<tf::Time> tau2;
  std::optional<std::string> C;
  bool widen = false;
};

template <class X>
const X& need(const std::optional<X>& v, const char* name) {
  if (!v) throw tf::PreconditionError(std::string("missing --") + name);
  return *v;
}

int run_generate(const Globals& g, const GenerateArgs& a) {
  tf::Metadata meta{{"family", a.family}};
  auto echo = [&](const char* key, const std::string& value) { meta.emplace_back(key, value); };
  std::optional<tf::UndirectedNetwork> net;
  std::optional<tf::CommoditySet> commodities;
  const std::string& f = a.family;
  if (f == "fig1") {
    net = tf::gen_fig1(need(a.T, "T"));
    echo("T", std::to_string(*a.T));
  } else if (f == "flow-lb") {
    net = tf::gen_flow_price_lb(need(a.T, "T"), tf::parse_rational(need(a.delta, "delta")), need(a.eps, "eps"));
    echo("T", std::to_string(*a.T));
    echo("delta", *a.delta);
    echo("eps", std::to_string(*a.eps));
  } else if (f == "single-sink-lb" || f == "single-source-lb") {
    const auto delta = tf::parse_rational(need(a.delta, "delta"));
    net = f == "single-sink-lb" ? tf::gen_single_sink_lb(need(a.T, "T"), delta)
                                : tf::gen_single_source_lb(need(a.T, "T"), delta);
    echo("T", std::to_string(*a.T));
    echo("delta", *a.delta);
  } else if (f == "time-lb-sink" || f == "time-lb-source" || f == "time-lb-tree" || f == "unit-tree") {
    const int k = need(a.k, "k");
    const tf::Time T = need(a.T, "T");
    if (f == "time-lb-sink") net = tf::gen_time_price_single_sink(k, T);
    if (f == "time-lb-source") net = tf::gen_time_price_single_source(k, T);
    if (f == "time-lb-tree") net = tf::gen_time_price_tree(k, T);
    if (f == "unit-tree") net = tf::gen_unit_capacity_tree(k, T);
    echo("k", std::to_string(k));
    echo("T", std::to_string(T));
  } else if (f == "eaf") {
    net = tf::gen_eaf(tf::parse_rational(need(a.U, "U")), need(a.T, "T"));
    echo("U", *a.U);
    echo("T", std::to_string(*a.T));
  } else if (f == "sat-quickest" || f == "sat-concurrent" || f == "sat-mc-quickest") {
    const auto formula = tf::parse_dimacs(tf::read_text_file(need(a.cnf, "cnf")));
    tf::SatReduction r;
    if (f == "sat-quickest") {
      r = tf::reduce_3sat_quickest(formula, need(a.tau1, "tau1"), need(a.tau2, "tau2"), a.widen);
      echo("tau1", std::to_string(*a.tau1));
      echo("tau2", std::to_string(*a.tau2));
      echo("widen", a.widen ? "true" : "false");
    } else if (f == "sat-concurrent") {
      r = tf::reduce_3sat_concurrent(formula);
    } else {
      const tf::BigInt C = parse_integer(need(a.C, "C"), "C");
      r = tf::reduce_3sat_mc_quickest(formula, C);
      echo("C", *a.C);
    }
    echo("variables", std::to_string(formula.variables));
    echo("clauses", std::to_string(formula.clauses.size()));
    std::string free;
    for (auto e : r.restricted.free_edges) free += (free.empty() ? "" : ",") + std::to_string(e);
    echo("free_edges", free);
    net = r.network;
    if (!r.commodities.commodities.empty()) commodities = r.commodities;
  } else if (f == "partition-max") {
    const auto p = tf::parse_partition(tf::read_text_file(need(a.partition, "partition")));
    net = tf::reduce_partition_maxfot(p);
    std::string ints;
    for (auto x : p.a) ints += (ints.empty() ? "" : " ") + std::to_string(x);
    echo("a", ints);
    echo("L", std::to_string(p.L));
  } else {
    throw tf::PreconditionError("unknown family: " + f);
  }
  emit(g, tf::instance_to_json(*net, commodities ? &*commodities : nullptr, meta));
  return 0;
}

// ---------------------------------------------------------------------------
// solve / pattern

Json gadget_arc_names(const tf::DirectedNetwork& net, const tf::FlowOverTime& f) {
  Json j = Json::object();
  for (tf::EdgeId e = 0; e < f.edge_count(); ++e) {
    if (f.segments(e).empty()) continue;
    j[std::to_string(e)] = net.node_name(net.edge(e).tail) + ">" + net.node_name(net.edge(e).head);
  }
  return j;
}

Json verified_witness(const tf::MaxFlowOverTimeResult& r, bool gadget) {
  const auto issues = tf::check_feasibility(r.witness, r.network);
  if (!issues.empty()) throw tf::CertificateError("witness failed re-verification: " + issues.front());
  if (tf::flow_value(r.witness, r.network) != r.value) throw tf::CertificateError("witness value mismatch");
  Json j = tf::witness_json(r.witness, r.value);
  j["network"] = gadget ? "gadget" : "input";
  if (gadget) j["arcs"] = gadget_arc_names(r.network, r.witness);
  return j;
}

std::string pattern_output(const Globals& g, const tf::EarliestArrivalPattern& p) {
  if (!g.table) return tf::dump(tf::pattern_json(p));
  std::vector<std::vector<std::string>> rows;
  for (tf::Time t = 0; t <= p.max_time(); ++t) rows.push_back({std::to_string(t), tf::to_string(p.values[t])});
  return tf::format_table({"theta", "p(theta)"}, rows);
}

tf::EarliestArrivalPattern pattern_of(const tf::Instance& inst, tf::Time tmax, int jobs) {
  return std::visit([&](const auto& net) { return tf::earliest_arrival_pattern(net, tmax, jobs); }, inst.network);
}

int run_solve(const Globals& g, const std::string& path, const std::string& mode, std::optional<tf::Time> T,
              std::optional<tf::Time> tmax) {
  const tf::Instance inst = tf::load_instance(path);
  const bool gadget = inst.is_undirected();
  const auto horizon = std::visit([](const auto& n) { return n.horizon(); }, inst.network);
  const tf::Rational B = std::visit([](const auto& n) { return n.total_supply(); }, inst.network);
  if (mode == "maxfot") {
    const tf::Time h = horizon_or(T, horizon);
    const auto r = std::visit([&](const auto& n) { return tf::max_flow_over_time(n, h); }, inst.network);
    Json j;
    j["mode"] = "maxfot";
    j["T"] = h;
    j["value"] = tf::to_string(r.value);
    j["witness"] = verified_witness(r, gadget);
    emit(g, g.table ? tf::format_table({"T", "value"}, {{std::to_string(h), tf::to_string(r.value)}}) : tf::dump(j));
    return 0;
  }
  if (mode == "quickest") {
    const auto q = std::visit([](const auto& n) { return tf::quickest_transshipment_time(n); }, inst.network);
    Json j;
    j["mode"] = "quickest";
    j["B"] = tf::to_string(B);
    j["time"] = q.ceil_infimum ? Json(*q.ceil_infimum) : Json(nullptr);
    j["integral_horizon"] = q.integral_horizon ? Json(*q.integral_horizon) : Json(nullptr);
    if (q.integral_horizon) {
      const auto r = std::visit([&](const auto& n) { return tf::max_flow_over_time(n, *q.integral_horizon); },
                                inst.network);
      if (r.value != B) throw tf::CertificateError("flow at the integral horizon does not route B");
      j["witness"] = verified_witness(r, gadget);
    }
    if (g.table) {
      emit(g, tf::format_table({"B", "time", "integral_horizon"},
                               {{tf::to_string(B), q.ceil_infimum ? std::to_string(*q.ceil_infimum) : "inf",
                                 q.integral_horizon ? std::to_string(*q.integral_horizon) : "inf"}}));
    } else {
      emit(g, tf::dump(j));
    }
    return 0;
  }
  if (mode == "pattern") {
    const tf::Time tm = tmax ? *tmax : horizon_or(T, horizon);
    emit(g, pattern_output(g, pattern_of(inst, tm, g.jobs)));
    return 0;
  }
  throw tf::PreconditionError("unknown solve mode: " + mode);
}

// ---------------------------------------------------------------------------
// orient / price

void verify_price(const tf::UndirectedNetwork& net, const tf::PriceReport& r) {
  const auto oriented = tf::apply_orientation(net, r.witness);
  if (r.objective == tf::Objective::flow_at_horizon) {
    if (tf::max_flow_over_time_value(oriented, *r.horizon) != *r.oriented) {
      throw tf::CertificateError("re-solving the witness orientation gives a different value");
    }
    return;
  }
  const auto q = tf::quickest_transshipment_time(oriented);
  const bool same = r.oriented ? (q.ceil_infimum && tf::Rational(*q.ceil_infimum) == *r.oriented) : !q.feasible();
  if (!same) throw tf::CertificateError("re-solving the witness orientation gives a different time");
}

tf::PriceReport price(const Globals& g, const tf::UndirectedNetwork& net, const std::string& kind,
                      std::optional<tf::Time> T) {
  tf::PriceReport r;
  if (kind == "flow") {
    const tf::Time h = horizon_or(T, net.horizon());
    r = tf::brute_force_best_orientation(net.with_horizon(h), tf::Objective::flow_at_horizon, search_options(g));
  } else if (kind == "time") {
    r = tf::brute_force_best_orientation(net, tf::Objective::quickest, search_options(g));
  } else {
    throw tf::PreconditionError("unknown price kind: " + kind);
  }
  verify_price(net, r);
  return r;
}

std::vector<std::string> price_row(const std::string& name, const tf::PriceReport& r) {
  return {name,
          r.objective == tf::Objective::flow_at_horizon ? "flow" : "time",
          r.horizon ? std::to_string(*r.horizon) : "-",
          tf::to_string(r.undirected),
          opt_str(r.oriented),
          opt_str(r.ratio),
          std::to_string(r.witness_mask)};
}

const std::vector<std::string> kPriceHeaders{"instance", "kind", "T", "undirected", "oriented", "ratio", "mask"};

int run_price(const Globals& g, const std::vector<std::string>& paths, const std::string& kind,
              std::optional<tf::Time> T) {
  std::vector<std::vector<std::string>> rows;
  Json all = Json::array();
  for (const auto& path : paths) {
    const tf::Instance inst = tf::load_instance(path);
    const auto& net = inst.undirected();
    const auto r = price(g, net, kind, T);
    rows.push_back(price_row(path, r));
    Json j = tf::price_report_json(net, r);
    j["certificate"] = "verified";
    all.push_back({{"instance", path}, {"report", std::move(j)}});
  }
  if (g.table) {
    emit(g, tf::format_table(kPriceHeaders, rows));
  } else {
    emit(g, tf::dump(paths.size() == 1 ? all[0]["report"] : all));
  }
  return 0;
}

struct OrientArgs {
  std::string algorithm = "bruteforce";
  std::string objective = "flow";
  std::optional<tf::Time> T;
  std::string tol = "1/1000000";
  std::string damping = "1";
  int max_iter = 200;
};

Json partition_json(const tf::UndirectedNetwork& net, const tf::PartitionReport& p) {
  auto names = [&](const std::vector<tf::NodeId>& vs) {
    Json a = Json::array();
    for (auto v : vs) a.push_back(net.node_name(v));
    return a;
  };
  return {{"sources_finite", names(p.partition.sources_finite)},
          {"sources_infinite", names(p.partition.sources_infinite)},
          {"sinks_finite", names(p.partition.sinks_finite)},
          {"sinks_infinite", names(p.partition.sinks_infinite)},
          {"supply_finite", tf::to_string(p.supply_finite)},
          {"demand_finite", tf::to_string(p.demand_finite)},
          {"restricted_value", tf::to_string(p.restricted_value)},
          {"bound", tf::to_string(p.bound)}};
}

int run_orient(const Globals& g, const std::string& path, const OrientArgs& a) {
  const tf::Instance inst = tf::load_instance(path);
  const auto& net = inst.undirected();
  if (a.algorithm == "bruteforce") {
    const auto r = price(g, net, a.objective == "time" ? "time" : a.objective, a.T);
    Json j;
    j["algorithm"] = "bruteforce";
    j["report"] = tf::price_report_json(net, r);
    j["certificate"] = "verified";
    emit(g, g.table ? tf::format_table(kPriceHeaders, {price_row(path, r)}) : tf::dump(j));
    return 0;
  }
  const tf::Time T = horizon_or(a.T, net.horizon());
  if (a.algorithm == "bicriteria") {
    const auto r = tf::bicriteria_orient(net, T);
    const auto issues = tf::check_feasibility(r.flow, r.oriented);
    if (!issues.empty() || tf::flow_value(r.flow, r.oriented) != r.value) {
      throw tf::CertificateError("bicriteria witness failed re-verification");
    }
    Json j;
    j["algorithm"] = "bicriteria";
    j["T"] = T;
    j["horizon"] = r.horizon;
    j["B"] = tf::to_string(net.total_supply());
    j["value"] = tf::to_string(r.value);
    j["orientation"] = tf::orientation_json(net, r.orientation);
    j["witness"] = tf::witness_json(r.flow, r.value);
    j["certificate"] = "verified";
    if (g.table) {
      emit(g, tf::format_table({"instance", "T", "horizon", "B", "value"},
                               {{path, std::to_string(T), std::to_string(r.horizon),
                                 tf::to_string(net.total_supply()), tf::to_string(r.value)}}));
    } else {
      emit(g, tf::dump(j));
    }
    return 0;
  }
  if (a.algorithm == "fixedpoint") {
    tf::FixedPointOptions fo;
    fo.max_iter = a.max_iter;
    fo.tol = tf::parse_rational(a.tol);
    fo.damping = tf::parse_rational(a.damping);
    const auto r = tf::orient_one_third(net, T, fo);
    const auto st = tf::add_super_terminals(net);
    const auto& fp = r.fixed_point;
    const bool converged = fp.status == tf::FixedPointStatus::converged;
    Json u = Json::object();
    Json flows = Json::object();
    for (std::size_t i = 0; i < st.terminals.size(); ++i) {
      u[net.node_name(st.terminals[i])] = tf::to_string(fp.u[i]);
      flows[net.node_name(st.terminals[i])] = tf::to_string(fp.flow.terminal_flow[i]);
    }
    Json j;
    j["algorithm"] = "fixedpoint";
    j["T"] = T;
    j["status"] = converged ? "converged" : "max_iter";
    j["iterations"] = fp.iterations;
    j["residual"] = tf::to_string(fp.residual);
    j["U"] = tf::to_string(st.U);
    j["u"] = std::move(u);
    j["terminal_flow"] = std::move(flows);
    j["certificate_holds"] = tf::fixed_point_certificate_holds(fp, st, fo.tol);
    j["balance_conditions_hold"] = tf::balance_conditions_hold(fp, st, fo.tol);
    j["flow_value"] = tf::to_string(r.flow_value);
    j["orientation"] = tf::orientation_json(net, r.orientation);
    j["partition"] = r.partition ? partition_json(net, *r.partition) : Json(nullptr);
    j["certified_value"] = tf::optional_rational_json(r.certified_value);
    if (g.table) {
      emit(g, tf::format_table({"instance", "status", "iterations", "flow_value", "certified_value"},
                               {{path, converged ? "converged" : "max_iter", std::to_string(fp.iterations),
                                 tf::to_string(r.flow_value), opt_str(r.certified_value)}}));
    } else {
      emit(g, tf::dump(j));
    }
    if (!converged) {
      std::cerr << "fixed point did not converge within " << fp.iterations << " iterations (residual "
                << tf::to_string(fp.residual) << ")\n";
      return 4;
    }
    return 0;
  }
  throw tf::PreconditionError("unknown algorithm: " + a.algorithm);
}

// ---------------------------------------------------------------------------
// verify-reduction

struct ReductionArgs {
  std::string kind;
  std::string file;
  tf::Time tau1 = 2;
  tf::Time tau2 = 0;
  bool widen = false;
  bool full = false;
  std::string C = "2";
};

int run_verify(const Globals& g, const ReductionArgs& a) {
  const auto opts = search_options(g);
  tf::ReductionReport rep;
  tf::UndirectedNetwork net;
  const std::string text = tf::read_text_file(a.file);
  if (a.kind == "partition-max") {
    const auto p = tf::parse_partition(text);
    net = tf::reduce_partition_maxfot(p);
    rep = tf::verify_partition_maxfot(p, opts);
  } else if (a.kind == "sat-quickest") {
    const auto f = tf::parse_dimacs(text);
    net = tf::reduce_3sat_quickest(f, a.tau1, a.tau2, a.widen).network;
    rep = tf::verify_sat_quickest(f, a.tau1, a.tau2, a.widen, a.full, opts);
  } else if (a.kind == "sat-concurrent") {
    const auto f = tf::parse_dimacs(text);
    net = tf::reduce_3sat_concurrent(f).network;
    rep = tf::verify_sat_concurrent(f, opts);
  } else if (a.kind == "sat-mc-quickest") {
    const auto f = tf::parse_dimacs(text);
    const tf::BigInt C = parse_integer(a.C, "C");
    net = tf::reduce_3sat_mc_quickest(f, C).network;
    rep = tf::verify_sat_mc_quickest(f, C, opts);
  } else {
    throw tf::PreconditionError("unknown reduction kind: " + a.kind);
  }
  Json j;
  j["kind"] = rep.kind;
  j["yes_instance"] = rep.yes_instance;
  j["relation"] = tf::to_string(rep.relation);
  j["expected"] = tf::to_string(rep.expected);
  j["measured"] = opt_str(rep.measured);
  if (a.full) j["full_enumeration"] = opt_str(rep.cross_check);
  j["consistent"] = rep.consistent;
  j["witness_mask"] = rep.mask;
  j["witness"] = tf::orientation_json(net, rep.witness);
  if (g.table) {
    std::vector<std::string> headers{"kind", "label", "expected", "measured"};
    std::vector<std::string> row{rep.kind, rep.yes_instance ? "YES" : "NO",
                                 tf::to_string(rep.relation) + " " + tf::to_string(rep.expected),
                                 opt_str(rep.measured)};
    if (a.full) {
      headers.emplace_back("full");
      row.push_back(opt_str(rep.cross_check));
    }
    headers.emplace_back("consistent");
    row.emplace_back(rep.consistent ? "yes" : "no");
    emit(g, tf::format_table(headers, {row}));
  } else {
    emit(g, tf::dump(j));
  }
  return 0;
}

// ---------------------------------------------------------------------------
// eaf-experiment

int run_eaf(const Globals& g, const std::string& path, std::optional<tf::Time> tmax, std::optional<std::string> alpha,
            std::optional<std::string> beta) {
  const tf::Instance inst = tf::load_instance(path);
  const auto& net = inst.undirected();
  const tf::Time tm = tmax ? *tmax : horizon_or(std::nullopt, net.horizon());
  const auto ex = tf::eaf_contraflow_experiment(net, tm, search_options(g));
  const auto a = alpha ? std::optional(tf::parse_rational(*alpha)) : std::nullopt;
  const auto b = beta ? std::optional(tf::parse_rational(*beta)) : std::nullopt;
  Json rows = Json::array();
  std::vector<std::vector<std::string>> table;
  for (const auto& row : ex.rows) {
    Json r;
    r["mask"] = row.mask;
    r["orientation"] = tf::orientation_json(net, row.orientation);
    Json arr = Json::array();
    for (const auto& v : row.arrivals) arr.push_back(tf::to_string(v));
    r["arrivals"] = std::move(arr);
    r["alpha"] = tf::to_string(row.alpha.value);
    r["alpha_attained"] = row.alpha.attained;
    r["beta"] = opt_str(row.beta);
    std::vector<std::string> cells{std::to_string(row.mask), tf::to_string(row.alpha.value),
                                   row.alpha.attained ? "yes" : "no", opt_str(row.beta)};
    if (a) {
      const bool ok = tf::check_alpha_time_approx(row.arrivals, ex.undirected, *a);
      r["alpha_check"] = ok;
      cells.push_back(ok ? "pass" : "fail");
    }
    if (b) {
      const bool ok = tf::check_beta_value_approx(row.arrivals, ex.undirected, *b);
      r["beta_check"] = ok;
      cells.push_back(ok ? "pass" : "fail");
    }
    rows.push_back(std::move(r));
    table.push_back(std::move(cells));
  }
  if (g.table) {
    std::vector<std::string> headers{"mask", "alpha", "attained", "beta"};
    if (a) headers.push_back("alpha=" + *alpha);
    if (b) headers.push_back("beta=" + *beta);
    emit(g, tf::format_table(headers, table));
    return 0;
  }
  Json j;
  j["T_max"] = tm;
  j["undirected_pattern"] = tf::pattern_json(ex.undirected)["values"];
  if (a) j["alpha"] = *alpha;
  if (b) j["beta"] = *beta;
  j["rows"] = std::move(rows);
  j["best_alpha_mask"] = ex.rows[ex.best_alpha_row].mask;
  j["best_beta_mask"] = ex.rows[ex.best_beta_row].mask;
  emit(g, tf::dump(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flows over time under edge orientation"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads (default: TEMPOFLOW_JOBS or all cores)");
  app.add_option("-o,--output", g.output, "Output file (default: stdout)");
  app.add_flag("--table", g.table, "Plain-text table instead of JSON");
  app.add_option("--max-edges", g.max_edges, "Cap on enumerated edges")->check(CLI::PositiveNumber);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write an instance from a family or reduction");
  generate->add_option("family", gen.family)->required();
  generate->add_option("--T", gen.T);
  generate->add_option("--delta", gen.delta);
  generate->add_option("--eps", gen.eps);
  generate->add_option("--k", gen.k);
  generate->add_option("--U", gen.U);
  generate->add_option("--cnf", gen.cnf, "DIMACS file");
  generate->add_option("--partition", gen.partition, "File of whitespace-separated integers");
  generate->add_option("--tau1", gen.tau1);
  generate->add_option("--tau2", gen.tau2);
  generate->add_option("--C", gen.C);
  generate->add_flag("--widen", gen.widen, "Also free the source-side edges (sat-quickest)");

  std::string solve_path, solve_mode = "maxfot";
  std::optional<tf::Time> solve_T, solve_tmax;
  auto* solve = app.add_subcommand("solve", "Maximum flow over time, quickest time or arrival pattern");
  solve->add_option("instance", solve_path)->required();
  solve->add_option("--mode", solve_mode)->check(CLI::IsMember({"maxfot", "quickest", "pattern"}));
  solve->add_option("--T", solve_T);
  solve->add_option("--tmax", solve_tmax);

  std::string orient_path;
  OrientArgs oa;
  auto* orient = app.add_subcommand("orient", "Compute an orientation");
  orient->add_option("instance", orient_path)->required();
  orient->add_option("--algorithm", oa.algorithm)->check(CLI::IsMember({"bruteforce", "bicriteria", "fixedpoint"}));
  orient->add_option("--objective", oa.objective)->check(CLI::IsMember({"flow", "time"}));
  orient->add_option("--T", oa.T);
  orient->add_option("--tol", oa.tol);
  orient->add_option("--damping", oa.damping);
  orient->add_option("--max-iter", oa.max_iter)->check(CLI::PositiveNumber);

  std::vector<std::string> price_paths;
  std::string price_kind = "flow";
  std::optional<tf::Time> price_T;
  auto* price_cmd = app.add_subcommand("price", "Price of orientation by exhaustive enumeration");
  price_cmd->add_option("instances", price_paths)->required();
  price_cmd->add_option("--kind", price_kind)->check(CLI::IsMember({"flow", "time"}));
  price_cmd->add_option("--T", price_T);

  ReductionArgs ra;
  auto* verify = app.add_subcommand("verify-reduction", "Check a hardness reduction's gap on a source instance");
  verify->add_option("kind", ra.kind)
      ->required()
      ->check(CLI::IsMember({"sat-quickest", "partition-max", "sat-concurrent", "sat-mc-quickest"}));
  verify->add_option("file", ra.file)->required();
  verify->add_option("--tau1", ra.tau1);
  verify->add_option("--tau2", ra.tau2);
  verify->add_option("--C", ra.C);
  verify->add_flag("--widen", ra.widen);
  verify->add_flag("--full", ra.full, "Cross-check with the unrestricted enumeration");

  std::string pattern_path;
  std::optional<tf::Time> pattern_tmax;
  auto* pattern = app.add_subcommand("pattern", "Earliest arrival pattern p(0..tmax)");
  pattern->add_option("instance", pattern_path)->required();
  pattern->add_option("--tmax", pattern_tmax);

  std::string eaf_path;
  std::optional<tf::Time> eaf_tmax;
  std::optional<std::string> eaf_alpha, eaf_beta;
  auto* eaf = app.add_subcommand("eaf-experiment", "Approximation factors of every orientation's arrival pattern");
  eaf->add_option("instance", eaf_path)->required();
  eaf->add_option("--tmax", eaf_tmax);
  eaf->add_option("--alpha", eaf_alpha);
  eaf->add_option("--beta", eaf_beta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*generate) return run_generate(g, gen);
    if (*solve) return run_solve(g, solve_path, solve_mode, solve_T, solve_tmax);
    if (*orient) return run_orient(g, orient_path, oa);
    if (*price_cmd) return run_price(g, price_paths, price_kind, price_T);
    if (*verify) return run_verify(g, ra);
    if (*pattern) {
      const tf::Instance inst = tf::load_instance(pattern_path);
      const auto horizon = std::visit([](const auto& n) { return n.horizon(); }, inst.network);
      emit(g, pattern_output(g, pattern_of(inst, horizon_or(pattern_tmax, horizon), g.jobs)));
      return 0;
    }
    if (*eaf) return run_eaf(g, eaf_path, eaf_tmax, eaf_alpha, eaf_beta);
  } catch (const tf::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tf::CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const tf::NonConvergenceError& e) {
    std::cerr << "no convergence: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
