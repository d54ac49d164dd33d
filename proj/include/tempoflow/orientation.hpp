#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tempoflow/flow_over_time.hpp"
#include "tempoflow/network.hpp"
#include "tempoflow/static_flow.hpp"
#include "tempoflow/temporal.hpp"

namespace tempoflow {

// ---------------------------------------------------------------------------
// Exhaustive orientation search

enum class Objective { flow_at_horizon, quickest };

struct SearchOptions {
  int max_edges = 20;  // cap on enumerated edges
  int jobs = 0;        // <= 0: TEMPOFLOW_JOBS or OpenMP default
  bool parallel = true;
};

// Enumerates orientations of `free_edges` on top of `base`. Bit i of a mask
// reverses free_edges[i] relative to base. Ties resolve to the smallest mask.
struct EnumerationSpace {
  Orientation base;
  std::vector<EdgeId> free_edges;

  static EnumerationSpace all_edges(const UndirectedNetwork& network);
  Orientation orientation(std::uint64_t mask) const;
};

struct FlowSearchResult {
  Rational value;
  std::uint64_t mask = 0;
  Orientation orientation;
};

struct QuickestSearchResult {
  std::optional<Time> time;  // ceil of the infimum; empty: no orientation routes B
  std::uint64_t mask = 0;
  Orientation orientation;
};

FlowSearchResult best_flow_orientation(const UndirectedNetwork& network, Time T, const EnumerationSpace& space,
                                       const SearchOptions& options = {});
QuickestSearchResult best_quickest_orientation(const UndirectedNetwork& network, const EnumerationSpace& space,
                                               const SearchOptions& options = {});

struct PriceReport {
  Objective objective = Objective::flow_at_horizon;
  std::optional<Time> horizon;  // flow objective only
  Rational undirected;          // value, or ceil of the quickest time
  std::optional<Rational> oriented;  // empty: infinite time
  Orientation witness;
  std::uint64_t witness_mask = 0;
  std::optional<Rational> ratio;  // empty: infinite
  // Quickest objective: smallest integral horizons with value B.
  std::optional<Time> undirected_integral_horizon;
  std::optional<Time> oriented_integral_horizon;
};

// Throws CapExceededError when m > options.max_edges and PreconditionError
// when the flow objective lacks a horizon or the undirected instance can
// never route its supplies (quickest).
PriceReport brute_force_best_orientation(const UndirectedNetwork& network, Objective objective,
                                         const SearchOptions& options = {});
// Same over a restricted enumeration space.
PriceReport best_orientation_in(const UndirectedNetwork& network, Objective objective, const EnumerationSpace& space,
                                const SearchOptions& options = {});

// ---------------------------------------------------------------------------
// Super terminals and the capacity fixed point

struct SuperTerminalNetwork {
  // Original nodes and edges keep their ids; s and t follow, then one
  // auxiliary edge per terminal ({s,v} for sources, {v,t} for sinks) in
  // ascending terminal id. All balances are zero; the original ones are kept
  // in `original_balances`.
  UndirectedNetwork network;
  NodeId super_source = 0;
  NodeId super_sink = 0;
  EdgeId original_edges = 0;
  std::vector<NodeId> terminals;
  std::vector<EdgeId> aux_edges;
  std::vector<Rational> original_balances;
  Rational U;  // auxiliary capacity standing in for "infinite"
};

SuperTerminalNetwork add_super_terminals(const UndirectedNetwork& network);

// Deterministic temporally repeated maximum flow on N' with auxiliary
// capacities aux_caps (parallel to terminals). Each undirected edge e is
// modelled by arcs 2e (declared direction) and 2e+1; opposite flows are
// netted so each edge is used in at most one direction.
struct AuxiliaryFlow {
  DirectedNetwork bidirected;
  StaticFlow static_flow;
  TemporallyRepeatedFlow repeated;
  std::vector<Rational> terminal_flow;  // |f_v| per terminal
  Rational value;
};

AuxiliaryFlow temporally_repeated_with_aux(const SuperTerminalNetwork& st, const std::vector<Rational>& aux_caps,
                                           Time T);

enum class FixedPointStatus { converged, max_iter };

struct FixedPointOptions {
  int max_iter = 200;
  Rational tol{1, 1000000};
  Rational damping = 1;  // gamma in (0, 1]
};

struct FixedPointResult {
  std::vector<Rational> u;  // parallel to terminals
  AuxiliaryFlow flow;       // f(u) at the returned u
  FixedPointStatus status = FixedPointStatus::max_iter;
  int iterations = 0;
  Rational residual;  // max_v |u_v - h(u)_v|
};

FixedPointResult fixed_point_capacity_iteration(const SuperTerminalNetwork& st, Time T,
                                                const FixedPointOptions& options = {});

// For every terminal: u_v = U or ||f_v| - |b_v|| <= tol.
bool fixed_point_certificate_holds(const FixedPointResult& r, const SuperTerminalNetwork& st, const Rational& tol);
// |f_v| <= |b_v| + tol, and |f_v| < |b_v| - tol implies u_v = U.
bool balance_conditions_hold(const FixedPointResult& r, const SuperTerminalNetwork& st, const Rational& tol);

struct TerminalPartition {
  std::vector<NodeId> sources_finite;    // S+_1
  std::vector<NodeId> sources_infinite;  // S+_2
  std::vector<NodeId> sinks_finite;      // S-_1
  std::vector<NodeId> sinks_infinite;    // S-_2
};

struct PartitionReport {
  TerminalPartition partition;
  Rational supply_finite;   // b(S+_1)
  Rational demand_finite;   // |b(S-_1)|
  Rational restricted_value;  // temporally repeated max flow on N'(S+_2, S-_2)
  Rational bound;             // max of the three
};

// Throws PreconditionError on a non-converged input.
PartitionReport partition_report(const FixedPointResult& r, const SuperTerminalNetwork& st, Time T);

// Edge e is oriented along the arc (2e or 2e+1) that carries flow; flowless
// edges low node id -> high node id. Throws PreconditionError if both carry flow.
Orientation orientation_from_flow(const UndirectedNetwork& network, const StaticFlow& bidirected_flow);
Orientation orientation_from_flow(const UndirectedNetwork& network, const TemporallyRepeatedFlow& bidirected_flow);

struct OneThirdResult {
  FixedPointResult fixed_point;
  std::optional<PartitionReport> partition;
  Orientation orientation;
  FlowOverTime flow;  // on the oriented network, auxiliary edges cut
  Rational flow_value;
  std::optional<Rational> certified_value;  // oracle value of the orientation; empty unless converged
};

// Throws PreconditionError unless the undirected oracle sends B at T.
OneThirdResult orient_one_third(const UndirectedNetwork& network, Time T, const FixedPointOptions& options = {});

struct BicriteriaResult {
  Orientation orientation;
  DirectedNetwork oriented;  // horizon 2T
  FlowOverTime flow;
  Rational value;
  Time horizon = 0;
};

// Throws PreconditionError unless the undirected oracle sends B at T, and
// CertificateError if the produced flow fails re-verification.
BicriteriaResult bicriteria_orient(const UndirectedNetwork& network, Time T);

// ---------------------------------------------------------------------------
// Earliest arrival approximations (integer grid, floor(theta / alpha))

// arrivals[theta] = |f|_theta for theta = 0..T. Throws PreconditionError if
// the pattern is shorter than arrivals or alpha/beta < 1.
bool check_alpha_time_approx(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p,
                             const Rational& alpha);
bool check_beta_value_approx(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p,
                             const Rational& beta);
bool check_alpha_time_approx(const FlowOverTime& f, const DirectedNetwork& network, const EarliestArrivalPattern& p,
                             const Rational& alpha);
bool check_beta_value_approx(const FlowOverTime& f, const DirectedNetwork& network, const EarliestArrivalPattern& p,
                             const Rational& beta);

struct AlphaThreshold {
  Rational value;  // infimum of feasible alpha (>= 1)
  bool attained = true;  // whether alpha = value itself passes
};

AlphaThreshold minimal_alpha(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p);
std::optional<Rational> minimal_beta(const std::vector<Rational>& arrivals, const EarliestArrivalPattern& p);

struct EafRow {
  std::uint64_t mask = 0;
  Orientation orientation;
  std::vector<Rational> arrivals;  // the orientation's own earliest arrival pattern
  AlphaThreshold alpha;
  std::optional<Rational> beta;  // empty: infinite
};

struct EafExperiment {
  EarliestArrivalPattern undirected;
  std::vector<EafRow> rows;  // ascending mask
  std::size_t best_alpha_row = 0;
  std::size_t best_beta_row = 0;
};

EafExperiment eaf_contraflow_experiment(const UndirectedNetwork& network, Time T_max, const SearchOptions& options = {});

}  // namespace tempoflow
