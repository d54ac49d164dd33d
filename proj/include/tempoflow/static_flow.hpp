#pragma once

#include <optional>
#include <vector>

#include "tempoflow/network.hpp"

namespace tempoflow {

// Edge id -> flow value.
struct StaticFlow {
  std::vector<Rational> values;

  friend bool operator==(const StaticFlow&, const StaticFlow&) = default;
};

struct FlowPath {
  std::vector<EdgeId> edges;
  Rational rate;
  Time transit = 0;  // tau_P

  friend bool operator==(const FlowPath&, const FlowPath&) = default;
};

struct PathDecomposition {
  std::vector<FlowPath> paths;
  // Circulations left after all s-t paths are removed (zero cost in any
  // min-cost flow); kept so paths + cycles reproduce the flow exactly.
  std::vector<FlowPath> cycles;

  friend bool operator==(const PathDecomposition&, const PathDecomposition&) = default;
};

// Shortest s-t path by transit time over edges with positive capacity.
// Among shortest paths, returns the first one found by a depth-first search
// of the shortest-path subgraph that expands arcs in ascending edge id.
std::optional<std::vector<EdgeId>> shortest_path_deterministic(const DirectedNetwork& network, NodeId source,
                                                               NodeId sink);

// Maximizes T*|x| - sum_e tau_e x_e by successive shortest paths (with node
// potentials), saturating one path per round and stopping once the shortest
// residual s-t path has length >= T. Residual arcs are expanded forward arcs
// first, then reverse arcs, each by ascending edge id. Throws
// PreconditionError if an uncapacitated path shorter than T exists.
StaticFlow max_temporally_repeated_static_flow(const DirectedNetwork& network, NodeId source, NodeId sink, Time T);

// |x|: net flow out of source.
Rational flow_amount(const StaticFlow& x, const DirectedNetwork& network, NodeId source);
// T*|x| - sum_e tau_e x_e.
Rational temporally_repeated_objective(const StaticFlow& x, const DirectedNetwork& network, NodeId source, Time T);

// Repeated ascending-id DFS from source over edges with remaining flow,
// removing the bottleneck each time. Throws PreconditionError if x violates
// capacities or conservation at a node other than source and sink.
PathDecomposition path_decomposition(const StaticFlow& x, const DirectedNetwork& network, NodeId source, NodeId sink);

}  // namespace tempoflow
