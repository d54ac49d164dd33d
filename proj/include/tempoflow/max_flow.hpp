#pragma once

#include <cstdint>
#include <vector>

#include "tempoflow/rational.hpp"

namespace tempoflow {

// Dinic's algorithm on integral capacities. Flow is either std::int64_t or
// BigInt. Supports resuming after arcs are added (the residual graph is kept).
template <class Flow>
class Dinic {
 public:
  explicit Dinic(int node_count) : first_(node_count, -1), level_(node_count), iter_(node_count) {}

  int node_count() const { return static_cast<int>(first_.size()); }

  // Returns the arc handle (even index); handle ^ 1 is the reverse arc.
  int add_arc(int from, int to, Flow capacity) {
    const int id = static_cast<int>(to_.size());
    push(from, to, std::move(capacity));
    push(to, from, Flow(0));
    return id;
  }

  Flow max_flow(int source, int sink);

  Flow flow_on(int handle) const { return cap_[handle ^ 1]; }
  const Flow& residual(int handle) const { return cap_[handle]; }
  int arc_count() const { return static_cast<int>(to_.size()) / 2; }

 private:
  void push(int from, int to, Flow cap) {
    to_.push_back(to);
    cap_.push_back(std::move(cap));
    next_.push_back(first_[from]);
    first_[from] = static_cast<int>(to_.size()) - 1;
  }
  bool bfs(int source, int sink);
  Flow dfs(int v, int sink, const Flow& limit);

  std::vector<int> first_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<Flow> cap_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

extern template class Dinic<std::int64_t>;
extern template class Dinic<BigInt>;

}  // namespace tempoflow
