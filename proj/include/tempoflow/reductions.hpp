#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tempoflow/generators.hpp"
#include "tempoflow/network.hpp"
#include "tempoflow/orientation.hpp"

namespace tempoflow {

// Instance compiled from a 3-SAT formula. `restricted` enumerates the two
// literal edges of every variable (plus, if widened, the source-side edges)
// on top of a base orientation that points everything else away from sources
// and towards sinks.
struct SatReduction {
  UndirectedNetwork network;
  CommoditySet commodities;  // empty for the single-commodity reduction
  EnumerationSpace restricted;
  std::vector<EdgeId> positive_literal_edges;  // {x1, x2} per variable
  std::vector<EdgeId> negative_literal_edges;  // {~x1, ~x2} per variable

  // x_i = 1: (x1, x2) and (~x2, ~x1); x_i = 0: (x2, x1) and (~x1, ~x2).
  Orientation assignment_orientation(std::uint64_t assignment) const;
  // Restricted-space mask equal to assignment_orientation(assignment).
  std::uint64_t assignment_mask(std::uint64_t assignment) const;
};

// Infinite capacities; per clause a (+1, -1) pair, per variable a literal
// block with its own (+1, -1) pair.
SatReduction reduce_3sat_quickest(const CnfFormula& formula, Time tau1, Time tau2, bool widen = false);

// n edge pairs on a chain plus four terminal edges; unit capacities; horizon 2L+2.
UndirectedNetwork reduce_partition_maxfot(const PartitionInstance& p);

// Zero transits; commodity i < k belongs to variable i+1, commodity k+j to clause j.
// Network balances are zero; demands live in the commodities.
SatReduction reduce_3sat_concurrent(const CnfFormula& formula);

// Zero transits; commodity i < k is the variable commodity, k+j the clause one.
SatReduction reduce_3sat_mc_quickest(const CnfFormula& formula, const BigInt& C);

// ---------------------------------------------------------------------------
// Gap verification. `expected` is the bound the construction promises for
// the instance's YES/NO label; `measured` comes from the oracles.

enum class Relation { equal, at_least, at_most };

struct ReductionReport {
  std::string kind;
  bool yes_instance = false;
  Relation relation = Relation::equal;
  Rational expected;
  std::optional<Rational> measured;  // empty: never routable
  std::optional<Rational> cross_check;  // full enumeration, when run
  bool consistent = false;
  std::uint64_t mask = 0;  // witness mask in the enumeration used for `measured`
  Orientation witness;
};

std::string to_string(Relation r);

// Full enumeration of all 2n+4 edges.
ReductionReport verify_partition_maxfot(const PartitionInstance& p, const SearchOptions& options = {});
// Restricted oracle; `full` adds the unrestricted enumeration (capped by options.max_edges).
ReductionReport verify_sat_quickest(const CnfFormula& formula, Time tau1, Time tau2, bool widen, bool full,
                                    const SearchOptions& options = {});
// YES: concurrent value of the assignment orientation, expected >= 1/3.
// NO: best value over the restricted space, expected == 0.
ReductionReport verify_sat_concurrent(const CnfFormula& formula, const SearchOptions& options = {});
// YES: time of the assignment orientation, expected <= 1.
// NO: best time over the restricted space, expected >= C / (2l).
ReductionReport verify_sat_mc_quickest(const CnfFormula& formula, const BigInt& C, const SearchOptions& options = {});

// Max concurrent value over the restricted space (ties: smallest mask).
struct ConcurrentSearchResult {
  Rational value;
  std::uint64_t mask = 0;
};
ConcurrentSearchResult best_concurrent_orientation(const SatReduction& r, const SearchOptions& options = {});

// Min zero-transit multicommodity quickest time over the restricted space.
struct McQuickestSearchResult {
  std::optional<Rational> time;
  std::uint64_t mask = 0;
};
McQuickestSearchResult best_mc_quickest_orientation(const SatReduction& r, const SearchOptions& options = {});

}  // namespace tempoflow
