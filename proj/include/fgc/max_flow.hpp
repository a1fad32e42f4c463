#ifndef FGC_MAX_FLOW_HPP
#define FGC_MAX_FLOW_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

#include "fgc/digraph.hpp"

namespace fgc {

struct MaxFlowResult {
  Cost value;
  std::vector<int> cut_side;  // min-cut witness: contains t, excludes s, sorted
};

namespace detail {

// Dinic with the usual paired-edge residual layout.
class DinicSolver {
 public:
  explicit DinicSolver(int n) : head_(static_cast<std::size_t>(n), -1), n_(n) {}

  void add_edge(int from, int to, Cost capacity) {
    edge_to_.push_back(to);
    edge_cap_.push_back(capacity);
    edge_next_.push_back(head_[static_cast<std::size_t>(from)]);
    head_[static_cast<std::size_t>(from)] = static_cast<int>(edge_to_.size()) - 1;
    edge_to_.push_back(from);
    edge_cap_.push_back(0);
    edge_next_.push_back(head_[static_cast<std::size_t>(to)]);
    head_[static_cast<std::size_t>(to)] = static_cast<int>(edge_to_.size()) - 1;
  }

  Cost run(int s, int t) {
    Cost flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      Cost pushed;
      while ((pushed = dfs(s, t, std::numeric_limits<Cost>::max())) > 0) flow += pushed;
    }
    return flow;
  }

  // After run: vertices unreachable from s in the residual graph.
  std::vector<int> unreachable_side(int s) {
    bfs(s, -1);
    std::vector<int> side;
    for (int v = 0; v < n_; ++v)
      if (level_[static_cast<std::size_t>(v)] < 0) side.push_back(v);
    return side;
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(static_cast<std::size_t>(n_), -1);
    std::queue<int> q;
    level_[static_cast<std::size_t>(s)] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = edge_next_[static_cast<std::size_t>(e)]) {
        int to = edge_to_[static_cast<std::size_t>(e)];
        if (edge_cap_[static_cast<std::size_t>(e)] > 0 && level_[static_cast<std::size_t>(to)] < 0) {
          level_[static_cast<std::size_t>(to)] = level_[static_cast<std::size_t>(v)] + 1;
          q.push(to);
        }
      }
    }
    return t >= 0 && level_[static_cast<std::size_t>(t)] >= 0;
  }

  Cost dfs(int v, int t, Cost limit) {
    if (v == t) return limit;
    for (int& e = iter_[static_cast<std::size_t>(v)]; e != -1; e = edge_next_[static_cast<std::size_t>(e)]) {
      int to = edge_to_[static_cast<std::size_t>(e)];
      if (edge_cap_[static_cast<std::size_t>(e)] <= 0 || level_[static_cast<std::size_t>(to)] != level_[static_cast<std::size_t>(v)] + 1)
        continue;
      Cost pushed = dfs(to, t, std::min(limit, edge_cap_[static_cast<std::size_t>(e)]));
      if (pushed > 0) {
        edge_cap_[static_cast<std::size_t>(e)] -= pushed;
        edge_cap_[static_cast<std::size_t>(e ^ 1)] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> edge_to_;
  std::vector<Cost> edge_cap_;
  std::vector<int> edge_next_;
  std::vector<int> level_;
  std::vector<int> iter_;
  int n_;
};

}  // namespace detail

// Maximum s-t flow with the given per-arc capacities. The returned witness
// is the sink side of a minimum cut: arcs entering it from the complement
// carry total capacity equal to the flow value.
inline MaxFlowResult max_flow(const Digraph& d, int s, int t, const std::vector<Cost>& capacities) {
  if (s < 0 || s >= d.n() || t < 0 || t >= d.n())
    throw InputError("max_flow endpoint out of range");
  if (s == t) throw InputError("max_flow requires s != t");
  if (static_cast<int>(capacities.size()) != d.arc_count())
    throw InputError("capacity vector size mismatch");
  detail::DinicSolver solver(d.n());
  for (const Arc& a : d.arcs()) {
    const Cost cap = capacities[static_cast<std::size_t>(a.id)];
    if (cap < 0) throw InputError("negative capacity on arc " + std::to_string(a.id));
    if (cap > 0) solver.add_edge(a.tail, a.head, cap);
  }
  const Cost value = solver.run(s, t);
  return MaxFlowResult{value, solver.unreachable_side(s)};
}

// Unit-capacity max flow over a digraph.
inline MaxFlowResult unit_max_flow(const Digraph& d, int s, int t) {
  return max_flow(d, s, t, std::vector<Cost>(static_cast<std::size_t>(d.arc_count()), 1));
}

}  // namespace fgc

#endif  // FGC_MAX_FLOW_HPP
