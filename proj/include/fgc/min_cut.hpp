#ifndef FGC_MIN_CUT_HPP
#define FGC_MIN_CUT_HPP

#include <algorithm>
#include <limits>
#include <tuple>
#include <vector>

#include "fgc/instance.hpp"

namespace fgc {

struct WeightedEdge {
  int u;
  int v;
  Cost capacity;
};

struct MinCutResult {
  Cost value;
  std::vector<int> side;  // a vertex set achieving the value, sorted
};

// Global minimum cut of an undirected capacitated graph, Stoer-Wagner
// contraction scheme. Returns the cut value and one side achieving it.
// Disconnected graphs yield value 0 with a side separating components.
// The witness is whichever minimizer the contraction order finds first;
// callers must not rely on any particular tie-break.
inline MinCutResult global_min_cut(int n, const std::vector<WeightedEdge>& weighted_edges) {
  if (n < 2) throw InputError("global_min_cut requires n >= 2");
  for (const WeightedEdge& e : weighted_edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InputError("min-cut edge endpoint out of range");
    if (e.u == e.v) throw InputError("min-cut edge is a self-loop");
    if (e.capacity < 0) throw InputError("min-cut capacity is negative");
  }

  // Dense capacity matrix over supernodes; members[i] tracks which original
  // vertices supernode i has absorbed.
  std::vector<std::vector<Cost>> w(static_cast<std::size_t>(n),
                                   std::vector<Cost>(static_cast<std::size_t>(n), 0));
  for (const WeightedEdge& e : weighted_edges) {
    w[static_cast<std::size_t>(e.u)][static_cast<std::size_t>(e.v)] += e.capacity;
    w[static_cast<std::size_t>(e.v)][static_cast<std::size_t>(e.u)] += e.capacity;
  }
  std::vector<std::vector<int>> members(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) members[static_cast<std::size_t>(v)] = {v};
  std::vector<int> active(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) active[static_cast<std::size_t>(v)] = v;

  Cost best_value = std::numeric_limits<Cost>::max();
  std::vector<int> best_side;

  while (active.size() > 1) {
    // Maximum adjacency order over the active supernodes.
    std::vector<char> added(static_cast<std::size_t>(n), 0);
    std::vector<Cost> conn(static_cast<std::size_t>(n), 0);
    int first = active[0];
    added[static_cast<std::size_t>(first)] = 1;
    for (int v : active)
      if (v != first) conn[static_cast<std::size_t>(v)] = w[static_cast<std::size_t>(first)][static_cast<std::size_t>(v)];
    int prev = first, last = first;
    for (std::size_t step = 1; step < active.size(); ++step) {
      int pick = -1;
      for (int v : active) {
        if (added[static_cast<std::size_t>(v)]) continue;
        if (pick == -1 || conn[static_cast<std::size_t>(v)] > conn[static_cast<std::size_t>(pick)]) pick = v;
      }
      if (pick < 0) throw SolverBug("min cut phase ran out of vertices");
      added[static_cast<std::size_t>(pick)] = 1;
      prev = last;
      last = pick;
      for (int v : active)
        if (!added[static_cast<std::size_t>(v)])
          conn[static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(pick)][static_cast<std::size_t>(v)];
    }

    // Cut of the phase: members(last) vs the rest.
    const Cost phase_value = conn[static_cast<std::size_t>(last)];
    if (phase_value < best_value) {
      best_value = phase_value;
      best_side = members[static_cast<std::size_t>(last)];
    }

    // Merge last into prev.
    for (int v : active) {
      if (v == last || v == prev) continue;
      w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(last)][static_cast<std::size_t>(v)];
      w[static_cast<std::size_t>(v)][static_cast<std::size_t>(prev)] = w[static_cast<std::size_t>(prev)][static_cast<std::size_t>(v)];
    }
    auto& into = members[static_cast<std::size_t>(prev)];
    auto& from = members[static_cast<std::size_t>(last)];
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
    active.erase(std::find(active.begin(), active.end(), last));
  }

  std::sort(best_side.begin(), best_side.end());
  return MinCutResult{best_value, best_side};
}

}  // namespace fgc

#endif  // FGC_MIN_CUT_HPP
