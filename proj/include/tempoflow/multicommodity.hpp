#pragma once

#include <optional>

#include "tempoflow/network.hpp"

namespace tempoflow {

// Static multicommodity oracles on directed networks with zero transit
// times; a flow over one time unit is then a static flow. Network balances
// are ignored, the commodities carry the demands. All of them throw
// PreconditionError on a nonzero transit time or an invalid commodity set.

// Largest lambda in [0, 1] such that every commodity i delivers at least
// lambda * D_i (D_i = its total demand), sources send at most their supply
// and sinks absorb at most their demand, under shared capacities.
Rational max_concurrent_value(const DirectedNetwork& network, const CommoditySet& commodities);

// max_concurrent_value >= lambda, decided by a feasibility LP. 0 <= lambda <= 1.
bool static_mc_feasibility(const DirectedNetwork& network, const CommoditySet& commodities, const Rational& lambda);

// Largest lambda such that lambda * b^i is routable exactly for every
// commodity. Empty when unbounded (nothing to route or no finite cut).
std::optional<Rational> max_balanced_scaling(const DirectedNetwork& network, const CommoditySet& commodities);

// Quickest time with zero transits: 1 / max_balanced_scaling. time is
// empty when the demands can never be met; 0 when scaling is unbounded.
struct MulticommodityQuickest {
  std::optional<Rational> time;
  std::optional<Rational> scaling;  // empty: unbounded
};

MulticommodityQuickest quickest_multicommodity_time(const DirectedNetwork& network, const CommoditySet& commodities);

}  // namespace tempoflow
