#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tempoflow/network.hpp"

namespace tftest {

using namespace tempoflow;

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);  // inclusive

struct RandomShape {
  int max_nodes = 6;
  int max_edges = 8;
  Time max_transit = 3;
  int max_capacity = 3;
  bool allow_infinite = false;
};

// Source "s" is node 0 and sink "t" the last node; their balances are
// large enough never to bind when `loose` is set, otherwise +-supply.
DirectedNetwork random_st_directed(Rng& rng, const RandomShape& shape, bool loose, int supply = 0);
UndirectedNetwork random_st_undirected(Rng& rng, const RandomShape& shape, int supply);

// Random connected-ish undirected network with `sources` sources and
// `sinks` sinks and integral balances in [1, 3].
UndirectedNetwork random_multi_terminal(Rng& rng, const RandomShape& shape, int sources, int sinks);

// Exact LP formulation of the maximum flow over time with piecewise
// constant rates on unit intervals. Every undirected edge gets two opposite
// arcs sharing its capacity.
Rational lp_max_flow_over_time(const DirectedNetwork& network, Time T);
Rational lp_max_flow_over_time(const UndirectedNetwork& network, Time T);

// Exact LP for max T*|x| - sum tau x on finite capacities.
Rational lp_temporally_repeated_objective(const DirectedNetwork& network, NodeId source, NodeId sink, Time T);

// All simple source-sink paths as edge id sequences, in lexicographic order.
std::vector<std::vector<EdgeId>> all_simple_paths(const DirectedNetwork& network, NodeId source, NodeId sink);

}  // namespace tftest
