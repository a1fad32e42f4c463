#ifndef FGC_EXACT_HPP
#define FGC_EXACT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "fgc/digraph.hpp"
#include "fgc/errors.hpp"
#include "fgc/feasibility.hpp"
#include "fgc/instance.hpp"

namespace fgc {

inline constexpr int kExactEdgeLimit = 24;
inline constexpr std::int64_t kExactArborescenceLimit = 5'000'000;

struct ExactResult {
  std::vector<int> edges;  // ascending edge ids
  Cost cost = 0;
  std::int64_t subsets_examined = 0;
};

// Optimal solution by enumerating edge subsets in nondecreasing total cost.
// Subsets come off a priority queue seeded with the empty set; each popped
// subset spawns the two classic successors over the cost-sorted edge order
// (append the next edge, or slide the highest-index edge one slot up), which
// enumerates every subset exactly once. The first feasible subset popped is
// optimal. Subsets smaller than a spanning tree are counted but not tested.
inline ExactResult exact_opt(const FgcInstance& instance) {
  const int m = instance.m();
  if (m > kExactEdgeLimit)
    throw RefusedScale("exact search refused: " + std::to_string(m) + " edges exceeds " +
                       std::to_string(kExactEdgeLimit));
  if (!is_feasible_instance(instance)) throw Infeasible("no feasible edge set exists");

  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cost ca = instance.edge(a).cost;
    const Cost cb = instance.edge(b).cost;
    if (ca != cb) return ca < cb;
    return a < b;
  });

  using Entry = std::tuple<Cost, std::uint32_t, int>;  // cost, positions mask, top position
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> frontier;
  frontier.push({0, 0, -1});

  ExactResult result;
  const int min_edges = instance.n() - 1;
  while (!frontier.empty()) {
    const auto [cost, mask, top] = frontier.top();
    frontier.pop();
    ++result.subsets_examined;

    const int picked = std::popcount(mask);
    if (picked >= min_edges) {
      std::vector<int> subset;
      subset.reserve(static_cast<std::size_t>(picked));
      for (int pos = 0; pos <= top; ++pos)
        if (mask & (1u << pos)) subset.push_back(order[static_cast<std::size_t>(pos)]);
      std::sort(subset.begin(), subset.end());
      if (is_feasible_solution(instance, subset)) {
        result.edges = std::move(subset);
        result.cost = cost;
        return result;
      }
    }

    if (top + 1 < m) {
      const Cost next_cost = instance.edge(order[static_cast<std::size_t>(top + 1)]).cost;
      frontier.push({cost + next_cost, mask | (1u << (top + 1)), top + 1});
      if (top >= 0) {
        const Cost top_cost = instance.edge(order[static_cast<std::size_t>(top)]).cost;
        frontier.push({cost - top_cost + next_cost,
                       (mask & ~(1u << top)) | (1u << (top + 1)), top + 1});
      }
    }
  }
  throw Infeasible("exhausted subsets without a feasible one");
}

namespace detail {

inline std::int64_t binomial_guarded(int n, int k, std::int64_t cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > cap) return cap + 1;
  }
  return result;
}

}  // namespace detail

// Minimum cost of a k-arborescence by direct enumeration: every arc subset
// of size k*(n-1) where each nonempty vertex set avoiding the root receives
// at least k arcs. Only usable when the subset count fits the guard.
inline Cost exact_k_arborescence(const Digraph& d, int root, int k) {
  if (root < 0 || root >= d.n()) throw InputError("root out of range");
  if (k < 1) throw InputError("arborescence count k must be >= 1");
  const int n = d.n();
  if (n == 1) return 0;
  if (n > 25) throw RefusedScale("exact arborescence enumeration refused: too many vertices");
  const int arc_count = d.arc_count();
  const int want = k * (n - 1);
  if (detail::binomial_guarded(arc_count, want, kExactArborescenceLimit) >
      kExactArborescenceLimit)
    throw RefusedScale("exact arborescence enumeration refused: too many subsets");
  if (want > arc_count)
    throw NoKArborescence("fewer arcs than k*(n-1)");

  // Per-arc head/tail masks; the cut test runs over vertex subsets.
  std::vector<std::uint32_t> head_bit(static_cast<std::size_t>(arc_count));
  std::vector<std::uint32_t> tail_bit(static_cast<std::size_t>(arc_count));
  for (const Arc& a : d.arcs()) {
    head_bit[static_cast<std::size_t>(a.id)] = 1u << a.head;
    tail_bit[static_cast<std::size_t>(a.id)] = 1u << a.tail;
  }
  const std::uint32_t all = (n == 32 ? ~0u : (1u << n) - 1u);
  const std::uint32_t non_root = all & ~(1u << root);

  bool found = false;
  Cost best = 0;
  std::vector<int> pick(static_cast<std::size_t>(want));
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    bool good = true;
    for (std::uint32_t s = non_root; s != 0 && good; s = (s - 1) & non_root) {
      int entering = 0;
      for (int id : pick)
        if ((head_bit[static_cast<std::size_t>(id)] & s) &&
            !(tail_bit[static_cast<std::size_t>(id)] & s))
          ++entering;
      if (entering < k) good = false;
    }
    if (good) {
      Cost total = 0;
      for (int id : pick) total += d.arc(id).cost;
      if (!found || total < best) {
        found = true;
        best = total;
      }
    }
    // next combination in lexicographic order
    int i = want - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == arc_count - want + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < want; ++j)
      pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (!found) throw NoKArborescence("no arc subset satisfies the cut condition");
  return best;
}

}  // namespace fgc

#endif  // FGC_EXACT_HPP
