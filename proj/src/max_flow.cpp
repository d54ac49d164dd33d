#include "tempoflow/max_flow.hpp"

#include <algorithm>
#include <queue>

namespace tempoflow {

template <class Flow>
bool Dinic<Flow>::bfs(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> queue;
  level_[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop();
    for (int a = first_[v]; a != -1; a = next_[a]) {
      if (cap_[a] > 0 && level_[to_[a]] < 0) {
        level_[to_[a]] = level_[v] + 1;
        queue.push(to_[a]);
      }
    }
  }
  return level_[sink] >= 0;
}

// Iterative would avoid deep recursion, but layered paths in our time
// expansions are at most a few thousand nodes long.
template <class Flow>
Flow Dinic<Flow>::dfs(int v, int sink, const Flow& limit) {
  if (v == sink) return limit;
  for (int& a = iter_[v]; a != -1; a = next_[a]) {
    const int w = to_[a];
    if (cap_[a] > 0 && level_[w] == level_[v] + 1) {
      const Flow pushed = dfs(w, sink, std::min<Flow>(limit, cap_[a]));
      if (pushed > 0) {
        cap_[a] -= pushed;
        cap_[a ^ 1] += pushed;
        return pushed;
      }
    }
  }
  return Flow(0);
}

template <class Flow>
Flow Dinic<Flow>::max_flow(int source, int sink) {
  Flow total(0);
  if (source == sink) return total;
  Flow unbounded(0);
  for (int a = first_[source]; a != -1; a = next_[a]) unbounded += cap_[a];
  while (bfs(source, sink)) {
    iter_ = first_;
    while (true) {
      const Flow pushed = dfs(source, sink, unbounded);
      if (pushed == 0) break;
      total += pushed;
    }
  }
  return total;
}

template class Dinic<std::int64_t>;
template class Dinic<BigInt>;

}  // namespace tempoflow
