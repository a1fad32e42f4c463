#ifndef FGC_MATROID_INTERSECTION_HPP
#define FGC_MATROID_INTERSECTION_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/instance.hpp"
#include "fgc/matroid.hpp"

namespace fgc {

// Additive split of the element weights, one summand per matroid. The found
// common independent set is simultaneously a minimum-weight independent set
// of its size in matroid 1 under weight1 and in matroid 2 under weight2,
// which certifies optimality; verify_weight_split checks this greedily.
struct WeightSplitCertificate {
  std::vector<Cost> weight1;
  std::vector<Cost> weight2;
};

struct IntersectionResult {
  std::vector<int> elements;  // ascending
  Cost total_weight = 0;
  WeightSplitCertificate certificate;
};

namespace detail {

// Exchange structure shared by the augmentation and certificate passes.
// Element-to-element arcs route through hub nodes shared by identical
// circuits, so every logical one-arc hop costs exactly two hops here and
// shortest-path tie-breaking on hop count carries over. Arc lengths are
// explicit because the two passes price the same arcs differently.
struct ExchangeGraph {
  int element_count = 0;
  int node_count = 0;
  int src = -1;
  int snk = -1;
  std::vector<std::vector<std::pair<int, Cost>>> out;  // (head, length)

  explicit ExchangeGraph(int elements) : element_count(elements), node_count(elements) {
    out.resize(static_cast<std::size_t>(elements));
  }
  int new_node() {
    out.emplace_back();
    return node_count++;
  }
  void arc(int tail, int head, Cost length) {
    out[static_cast<std::size_t>(tail)].push_back({head, length});
  }
};

class IntersectionEngine {
 public:
  IntersectionEngine(Matroid& m1, Matroid& m2, const std::vector<Cost>& weights)
      : m1_(m1), m2_(m2), w_(weights), n_(static_cast<int>(weights.size())) {
    if (m1.ground_size() != n_ || m2.ground_size() != n_)
      throw InputError("matroid intersection: ground set sizes disagree");
    in_set_.assign(static_cast<std::size_t>(n_), 0);
  }

  IntersectionResult run(int target_size) {
    if (target_size < 0 || target_size > n_)
      throw InputError("matroid intersection: target size out of range");
    m1_.reset();
    m2_.reset();
    for (int round = 0; round < target_size; ++round)
      if (!augment())
        throw CardinalityUnreachable("no common independent set of size " +
                                     std::to_string(target_size) +
                                     " (reached " + std::to_string(round) + ")");
    IntersectionResult result;
    for (int e = 0; e < n_; ++e)
      if (in_set_[static_cast<std::size_t>(e)]) {
        result.elements.push_back(e);
        result.total_weight += w_[static_cast<std::size_t>(e)];
      }
    result.certificate = certificate();
    return result;
  }

 private:
  static constexpr Cost kInf = std::numeric_limits<Cost>::max() / 4;

  Cost weight_of(int e) const { return w_[static_cast<std::size_t>(e)]; }

  // Arcs by exchange role. enter1(x, hub) + leave1(hub, y) span the pairs
  // with current - x + y independent in matroid 1; enter2/leave2 mirror
  // this for matroid 2 (y -> hub -> x). The two passes assign lengths.
  template <typename Enter1, typename Leave1, typename Enter2, typename Leave2>
  ExchangeGraph build_graph(bool with_terminals, Enter1 enter1, Leave1 leave1, Enter2 enter2,
                            Leave2 leave2) {
    ExchangeGraph g(n_);
    if (with_terminals) {
      g.src = g.new_node();
      g.snk = g.new_node();
    }
    int free_hub1 = -1;   // current + y independent in matroid 1: all of current swaps
    int free_hub2 = -1;   // current + y independent in matroid 2: same on the other side
    std::map<std::vector<int>, int> hubs1;
    std::map<std::vector<int>, int> hubs2;

    for (int y = 0; y < n_; ++y) {
      if (in_set_[static_cast<std::size_t>(y)]) continue;
      if (m1_.can_add(y)) {
        if (with_terminals) g.arc(g.src, y, weight_of(y));
        if (free_hub1 == -1) {
          free_hub1 = g.new_node();
          for (int x = 0; x < n_; ++x)
            if (in_set_[static_cast<std::size_t>(x)]) g.arc(x, free_hub1, enter1(x));
        }
        g.arc(free_hub1, y, leave1(y));
      } else {
        const std::vector<int> circ = m1_.circuit(y);
        if (!circ.empty()) {
          auto [it, inserted] = hubs1.try_emplace(circ, -1);
          if (inserted) {
            it->second = g.new_node();
            for (int x : circ) g.arc(x, it->second, enter1(x));
          }
          g.arc(it->second, y, leave1(y));
        }
      }
      if (m2_.can_add(y)) {
        if (with_terminals) g.arc(y, g.snk, 0);
        if (free_hub2 == -1) {
          free_hub2 = g.new_node();
          for (int x = 0; x < n_; ++x)
            if (in_set_[static_cast<std::size_t>(x)]) g.arc(free_hub2, x, leave2(x));
        }
        g.arc(y, free_hub2, enter2(y));
      } else {
        const std::vector<int> circ = m2_.circuit(y);
        if (!circ.empty()) {
          auto [it, inserted] = hubs2.try_emplace(circ, -1);
          if (inserted) {
            it->second = g.new_node();
            for (int x : circ) g.arc(it->second, x, leave2(x));
          }
          g.arc(y, it->second, enter2(y));
        }
      }
    }
    return g;
  }

  // Augmentation pricing: a path pays +w on every element it would add and
  // -w on every element it would drop, each charged on the arc entering
  // that element.
  ExchangeGraph augment_graph() {
    return build_graph(
        true, [&](int) { return Cost{0}; }, [&](int y) { return weight_of(y); },
        [&](int) { return Cost{0}; }, [&](int x) { return -weight_of(x); });
  }

  // Certificate pricing: arc lengths encode the difference constraints
  // psi(y) - psi(x) <= w(y) - w(x) across matroid-1 exchanges and
  // psi(x) - psi(y) <= 0 across matroid-2 exchanges.
  ExchangeGraph dual_graph() {
    return build_graph(
        false, [&](int x) { return -weight_of(x); }, [&](int y) { return weight_of(y); },
        [&](int) { return Cost{0}; }, [&](int) { return Cost{0}; });
  }

  // Queue-based relaxation to a fixed point, lexicographic on
  // (length, hops). `from_everywhere` starts every node at zero, which
  // solves the difference constraints; otherwise distances grow from src.
  // The relaxation budget turns a negative cycle into a loud failure.
  void relax_all(const ExchangeGraph& g, bool from_everywhere, std::vector<Cost>& dist,
                 std::vector<int>& hops, std::vector<int>& parent) const {
    const std::size_t nodes = static_cast<std::size_t>(g.node_count);
    dist.assign(nodes, kInf);
    hops.assign(nodes, 0);
    parent.assign(nodes, -1);
    std::vector<char> queued(nodes, 0);
    std::vector<int> requeues(nodes, 0);
    std::deque<int> queue;
    auto seed = [&](int v) {
      dist[static_cast<std::size_t>(v)] = 0;
      queue.push_back(v);
      queued[static_cast<std::size_t>(v)] = 1;
    };
    if (from_everywhere) {
      for (int v = 0; v < g.node_count; ++v) seed(v);
    } else {
      seed(g.src);
    }
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      queued[static_cast<std::size_t>(u)] = 0;
      const Cost du = dist[static_cast<std::size_t>(u)];
      const int hu = hops[static_cast<std::size_t>(u)];
      for (const auto& [v, len] : g.out[static_cast<std::size_t>(u)]) {
        const Cost nd = du + len;
        const int nh = hu + 1;
        if (nd < dist[static_cast<std::size_t>(v)] ||
            (nd == dist[static_cast<std::size_t>(v)] && nh < hops[static_cast<std::size_t>(v)])) {
          dist[static_cast<std::size_t>(v)] = nd;
          hops[static_cast<std::size_t>(v)] = nh;
          parent[static_cast<std::size_t>(v)] = u;
          if (!queued[static_cast<std::size_t>(v)]) {
            if (++requeues[static_cast<std::size_t>(v)] > g.node_count + 4)
              throw SolverBug("matroid intersection: relaxation budget exceeded");
            queue.push_back(v);
            queued[static_cast<std::size_t>(v)] = 1;
          }
        }
      }
    }
  }

  bool augment() {
    const ExchangeGraph g = augment_graph();
    std::vector<Cost> dist;
    std::vector<int> hops;
    std::vector<int> parent;
    relax_all(g, false, dist, hops, parent);
    if (dist[static_cast<std::size_t>(g.snk)] >= kInf) return false;

    std::vector<int> path_elements;
    int steps = 0;
    for (int v = parent[static_cast<std::size_t>(g.snk)]; v != g.src;
         v = parent[static_cast<std::size_t>(v)]) {
      if (v < 0 || ++steps > g.node_count)
        throw SolverBug("matroid intersection: malformed augmenting path");
      if (v < g.element_count) path_elements.push_back(v);
    }
    std::vector<int> removals;
    std::vector<int> additions;
    for (int e : path_elements)
      (in_set_[static_cast<std::size_t>(e)] ? removals : additions).push_back(e);
    if (additions.size() != removals.size() + 1)
      throw SolverBug("matroid intersection: augmenting path is not alternating");
    for (int x : removals) {
      m1_.remove(x);
      m2_.remove(x);
      in_set_[static_cast<std::size_t>(x)] = 0;
    }
    for (int y : additions) {
      m1_.add(y);
      m2_.add(y);
      in_set_[static_cast<std::size_t>(y)] = 1;
    }
    return true;
  }

  // Solves the exchange difference constraints over the final set and turns
  // the potential into a weight split. A solution exists exactly because
  // the set is a minimum-weight common independent set of its size.
  WeightSplitCertificate certificate() {
    WeightSplitCertificate cert;
    cert.weight1.assign(static_cast<std::size_t>(n_), 0);
    cert.weight2.assign(static_cast<std::size_t>(n_), 0);
    if (n_ == 0) return cert;

    const ExchangeGraph g = dual_graph();
    std::vector<Cost> dist;
    std::vector<int> hops;
    std::vector<int> parent;
    relax_all(g, true, dist, hops, parent);

    Cost low = 0;
    for (int e = 0; e < n_; ++e) low = std::min(low, dist[static_cast<std::size_t>(e)]);
    for (int e = 0; e < n_; ++e) {
      cert.weight2[static_cast<std::size_t>(e)] = dist[static_cast<std::size_t>(e)] - low;
      cert.weight1[static_cast<std::size_t>(e)] =
          w_[static_cast<std::size_t>(e)] - cert.weight2[static_cast<std::size_t>(e)];
    }
    return cert;
  }

  Matroid& m1_;
  Matroid& m2_;
  const std::vector<Cost>& w_;
  int n_;
  std::vector<char> in_set_;
};

}  // namespace detail

// Minimum-weight common independent set of exactly target_size elements.
// Successive shortest augmenting paths; every intermediate set is a
// minimum-weight common independent set of its own size. Both matroids are
// reset first and end holding the returned set. Throws
// CardinalityUnreachable when no common independent set reaches the target.
inline IntersectionResult weighted_matroid_intersection(Matroid& m1, Matroid& m2,
                                                        const std::vector<Cost>& weights,
                                                        int target_size) {
  detail::IntersectionEngine engine(m1, m2, weights);
  return engine.run(target_size);
}

// Minimum weight of an independent set of the given size, greedily; nullopt
// when the matroid rank is too small. Clobbers the matroid state.
inline std::optional<Cost> greedy_min_weight(Matroid& m, const std::vector<Cost>& weights,
                                             int target_size) {
  if (static_cast<int>(weights.size()) != m.ground_size())
    throw InputError("greedy_min_weight: weight vector size mismatch");
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (weights[static_cast<std::size_t>(a)] != weights[static_cast<std::size_t>(b)])
      return weights[static_cast<std::size_t>(a)] < weights[static_cast<std::size_t>(b)];
    return a < b;
  });
  m.reset();
  Cost total = 0;
  int taken = 0;
  for (int e : order) {
    if (taken == target_size) break;
    if (m.can_add(e)) {
      m.add(e);
      total += weights[static_cast<std::size_t>(e)];
      ++taken;
    }
  }
  if (taken < target_size) return std::nullopt;
  return total;
}

// Checks a weight-split certificate: the split must recompose the weights,
// the elements must be independent in both matroids, and the set must attain
// the greedy minimum weight of its size in each matroid under its summand.
// Clobbers both matroid states.
inline bool verify_weight_split(Matroid& m1, Matroid& m2, const std::vector<Cost>& weights,
                                const std::vector<int>& elements,
                                const WeightSplitCertificate& cert) {
  const std::size_t n = weights.size();
  if (cert.weight1.size() != n || cert.weight2.size() != n) return false;
  for (std::size_t e = 0; e < n; ++e)
    if (cert.weight1[e] + cert.weight2[e] != weights[e]) return false;
  for (Matroid* m : {&m1, &m2}) {
    m->reset();
    for (int e : elements) {
      if (!m->can_add(e)) return false;
      m->add(e);
    }
  }
  Cost sum1 = 0;
  Cost sum2 = 0;
  for (int e : elements) {
    sum1 += cert.weight1[static_cast<std::size_t>(e)];
    sum2 += cert.weight2[static_cast<std::size_t>(e)];
  }
  const int p = static_cast<int>(elements.size());
  const auto best1 = greedy_min_weight(m1, cert.weight1, p);
  const auto best2 = greedy_min_weight(m2, cert.weight2, p);
  return best1 && best2 && *best1 == sum1 && *best2 == sum2;
}

}  // namespace fgc

#endif  // FGC_MATROID_INTERSECTION_HPP
