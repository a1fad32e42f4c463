#ifndef FGC_ARBORESCENCE_HPP
#define FGC_ARBORESCENCE_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "fgc/digraph.hpp"
#include "fgc/errors.hpp"
#include "fgc/matroid.hpp"
#include "fgc/matroid_intersection.hpp"
#include "fgc/max_flow.hpp"

namespace fgc {

// Union of k arc-disjoint spanning arborescences rooted at `root`.
// Equivalently: k*(n-1) arcs, in-degree k at every non-root vertex, and
// every nonempty S avoiding the root has at least k entering arcs.
struct KArborescence {
  ArcSet arcs;
  int root = 0;
  int k = 1;
  Cost total_cost = 0;
};

struct KArborescenceResult {
  KArborescence arborescence;
  WeightSplitCertificate certificate;
};

namespace detail {

inline void check_root(const Digraph& d, int root) {
  if (root < 0 || root >= d.n()) throw InputError("root out of range");
}

inline bool is_arborescence(const Digraph& d, const std::vector<int>& arc_ids, int root) {
  const int n = d.n();
  if (static_cast<int>(arc_ids.size()) != n - 1) return false;
  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (int id : arc_ids) {
    const Arc& a = d.arc(id);
    ++indeg[static_cast<std::size_t>(a.head)];
    out[static_cast<std::size_t>(a.tail)].push_back(a.head);
  }
  if (indeg[static_cast<std::size_t>(root)] != 0) return false;
  for (int v = 0; v < n; ++v)
    if (v != root && indeg[static_cast<std::size_t>(v)] != 1) return false;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> q;
  seen[static_cast<std::size_t>(root)] = 1;
  q.push(root);
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int to : out[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(to)]) {
        seen[static_cast<std::size_t>(to)] = 1;
        ++reached;
        q.push(to);
      }
  }
  return reached == n;
}

struct ContractArc {
  int tail;
  int head;
  Cost cost;
  int orig_id;  // arc id in the original digraph, for tie-breaking
};

// Contraction step of the minimum spanning arborescence recursion. Returns
// indices into `arcs` of a minimum-cost arborescence rooted at root.
inline std::vector<int> edmonds_recurse(int n, int root, const std::vector<ContractArc>& arcs) {
  if (n == 1) return {};
  std::vector<int> best(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    const ContractArc& a = arcs[static_cast<std::size_t>(i)];
    if (a.head == root) continue;
    int& b = best[static_cast<std::size_t>(a.head)];
    if (b == -1 || a.cost < arcs[static_cast<std::size_t>(b)].cost ||
        (a.cost == arcs[static_cast<std::size_t>(b)].cost &&
         a.orig_id < arcs[static_cast<std::size_t>(b)].orig_id))
      b = i;
  }
  for (int v = 0; v < n; ++v)
    if (v != root && best[static_cast<std::size_t>(v)] == -1)
      throw NoKArborescence("no spanning arborescence from the chosen root");

  // Cycle hunt in the functional graph v -> tail(best[v]).
  std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 new, 1 on walk, 2 settled
  std::vector<int> cycle;
  for (int start = 0; start < n && cycle.empty(); ++start) {
    int v = start;
    std::vector<int> walk;
    while (v != root && state[static_cast<std::size_t>(v)] == 0) {
      state[static_cast<std::size_t>(v)] = 1;
      walk.push_back(v);
      v = arcs[static_cast<std::size_t>(best[static_cast<std::size_t>(v)])].tail;
    }
    if (v != root && state[static_cast<std::size_t>(v)] == 1) {
      auto it = std::find(walk.begin(), walk.end(), v);
      cycle.assign(it, walk.end());
    }
    for (int u : walk) state[static_cast<std::size_t>(u)] = 2;
  }

  if (cycle.empty()) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
      if (v != root) out.push_back(best[static_cast<std::size_t>(v)]);
    return out;
  }

  std::vector<char> in_cycle(static_cast<std::size_t>(n), 0);
  for (int v : cycle) in_cycle[static_cast<std::size_t>(v)] = 1;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next_id = 0;
  for (int v = 0; v < n; ++v)
    if (!in_cycle[static_cast<std::size_t>(v)]) comp[static_cast<std::size_t>(v)] = next_id++;
  const int super = next_id++;
  for (int v : cycle) comp[static_cast<std::size_t>(v)] = super;

  std::vector<ContractArc> sub;
  std::vector<int> sub_from;
  for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
    const ContractArc& a = arcs[static_cast<std::size_t>(i)];
    const int t = comp[static_cast<std::size_t>(a.tail)];
    const int h = comp[static_cast<std::size_t>(a.head)];
    if (t == h) continue;
    Cost c = a.cost;
    if (h == super)
      c -= arcs[static_cast<std::size_t>(best[static_cast<std::size_t>(a.head)])].cost;
    sub.push_back({t, h, c, a.orig_id});
    sub_from.push_back(i);
  }

  const std::vector<int> chosen_sub =
      edmonds_recurse(next_id, comp[static_cast<std::size_t>(root)], sub);
  std::vector<int> out;
  int entry_vertex = -1;
  for (int j : chosen_sub) {
    const int i = sub_from[static_cast<std::size_t>(j)];
    out.push_back(i);
    if (comp[static_cast<std::size_t>(arcs[static_cast<std::size_t>(i)].head)] == super)
      entry_vertex = arcs[static_cast<std::size_t>(i)].head;
  }
  if (entry_vertex == -1)
    throw SolverBug("arborescence contraction: contracted cycle never entered");
  for (int v : cycle)
    if (v != entry_vertex) out.push_back(best[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace detail

// True iff k arc-disjoint spanning arborescences rooted at root exist, i.e.
// every non-root vertex admits k arc-disjoint paths from the root.
inline bool exists_k_arborescence(const Digraph& d, int root, int k) {
  detail::check_root(d, root);
  if (k < 1) throw InputError("arborescence count k must be >= 1");
  for (int v = 0; v < d.n(); ++v) {
    if (v == root) continue;
    if (unit_max_flow(d, root, v).value < k) return false;
  }
  return true;
}

// Minimum-cost spanning arborescence by repeated cycle contraction.
// Equal-cost choices resolve toward the smaller arc id.
inline KArborescence min_cost_arborescence(const Digraph& d, int root) {
  detail::check_root(d, root);
  std::vector<detail::ContractArc> arcs;
  arcs.reserve(d.arcs().size());
  for (const Arc& a : d.arcs()) arcs.push_back({a.tail, a.head, a.cost, a.id});
  const std::vector<int> chosen = detail::edmonds_recurse(d.n(), root, arcs);
  std::vector<int> ids;
  ids.reserve(chosen.size());
  for (int i : chosen) ids.push_back(arcs[static_cast<std::size_t>(i)].orig_id);
  ArcSet set(d, ids);
  const Cost total = set.total_cost();
  return {std::move(set), root, 1, total};
}

// Minimum-cost union of k arc-disjoint spanning arborescences, as a
// minimum-weight common independent set of size k*(n-1) in the k-fold
// graphic union matroid of the underlying edges and the partition matroid
// capping in-degrees at k (0 at the root).
inline KArborescenceResult min_cost_k_arborescence(const Digraph& d, int root, int k) {
  detail::check_root(d, root);
  if (k < 1) throw InputError("arborescence count k must be >= 1");
  const int n = d.n();
  const int arc_count = d.arc_count();
  if (n == 1) {
    WeightSplitCertificate cert;
    cert.weight1.assign(static_cast<std::size_t>(arc_count), 0);
    cert.weight2.assign(static_cast<std::size_t>(arc_count), 0);
    return {{ArcSet(d, {}), root, k, 0}, std::move(cert)};
  }
  if (!exists_k_arborescence(d, root, k))
    throw NoKArborescence("digraph has no " + std::to_string(k) +
                          " arc-disjoint spanning arborescences from this root");

  std::vector<std::pair<int, int>> pairs;
  std::vector<int> heads;
  std::vector<Cost> weights;
  pairs.reserve(static_cast<std::size_t>(arc_count));
  heads.reserve(static_cast<std::size_t>(arc_count));
  weights.reserve(static_cast<std::size_t>(arc_count));
  for (const Arc& a : d.arcs()) {
    pairs.emplace_back(a.tail, a.head);
    heads.push_back(a.head);
    weights.push_back(a.cost);
  }
  std::vector<int> caps(static_cast<std::size_t>(n), k);
  caps[static_cast<std::size_t>(root)] = 0;
  GraphicUnionMatroid forest_side(n, std::move(pairs), k);
  PartitionMatroid degree_side(std::move(heads), std::move(caps));

  IntersectionResult found;
  try {
    found = weighted_matroid_intersection(forest_side, degree_side, weights, k * (n - 1));
  } catch (const CardinalityUnreachable& ex) {
    throw SolverBug(std::string("k-arborescence search failed after the existence check: ") +
                    ex.what());
  }
  KArborescence arb{ArcSet(d, found.elements), root, k, found.total_weight};
  return {std::move(arb), std::move(found.certificate)};
}

namespace detail {

// Can the partial arborescence absorb pool arc `candidate` and still leave a
// pool decomposable into `remaining_k` - 1 further arborescences? True iff
// the pool minus the part built so far carries `remaining_k` arc-disjoint
// paths from {root, tail} to head.
inline bool extraction_step_valid(const Digraph& d, const std::vector<char>& in_pool,
                                  const std::vector<char>& in_part, int candidate, int remaining_k,
                                  int root) {
  const Arc& cand = d.arc(candidate);
  const int merged = root;
  Digraph test(d.n());
  for (const Arc& a : d.arcs()) {
    if (!in_pool[static_cast<std::size_t>(a.id)] || in_part[static_cast<std::size_t>(a.id)])
      continue;
    const int t = a.tail == cand.tail ? merged : a.tail;
    const int h = a.head == cand.tail ? merged : a.head;
    if (t == h) continue;
    test.add_arc(t, h, 0);
  }
  return max_flow(test, merged, cand.head,
                  std::vector<Cost>(static_cast<std::size_t>(test.arc_count()), 1))
             .value >= remaining_k;
}

}  // namespace detail

// Splits a k-arborescence into k arc-disjoint spanning arborescences.
// Extracts one arborescence at a time, admitting an arc only when the rest
// of the pool retains enough connectivity; candidates are tried in
// ascending arc id. A failure here means the input was not actually a
// k-arborescence and surfaces as NotDecomposable.
inline std::vector<ArcSet> decompose(const KArborescence& t) {
  const Digraph& d = t.arcs.digraph();
  const int n = d.n();
  const int k = t.k;
  const int root = t.root;
  detail::check_root(d, root);
  if (k < 1) throw InputError("arborescence count k must be >= 1");

  if (n == 1) {
    if (!t.arcs.empty()) throw NotDecomposable("single-vertex arborescence must be empty");
    return std::vector<ArcSet>(static_cast<std::size_t>(k), ArcSet(d, {}));
  }
  if (static_cast<int>(t.arcs.size()) != k * (n - 1))
    throw NotDecomposable("arc count is not k*(n-1)");
  {
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    for (int id : t.arcs.ids()) ++indeg[static_cast<std::size_t>(d.arc(id).head)];
    if (indeg[static_cast<std::size_t>(root)] != 0)
      throw NotDecomposable("root has entering arcs");
    for (int v = 0; v < n; ++v)
      if (v != root && indeg[static_cast<std::size_t>(v)] != k)
        throw NotDecomposable("non-root vertex with in-degree != k");
  }

  std::vector<char> in_pool(static_cast<std::size_t>(d.arc_count()), 0);
  for (int id : t.arcs.ids()) in_pool[static_cast<std::size_t>(id)] = 1;
  std::vector<int> pool_ids = t.arcs.ids();

  std::vector<ArcSet> parts;
  for (int remaining_k = k; remaining_k >= 2; --remaining_k) {
    std::vector<char> reached(static_cast<std::size_t>(n), 0);
    std::vector<char> in_part(static_cast<std::size_t>(d.arc_count()), 0);
    std::vector<int> part_ids;
    reached[static_cast<std::size_t>(root)] = 1;
    int reached_count = 1;
    while (reached_count < n) {
      int accepted = -1;
      for (int id : pool_ids) {
        if (in_part[static_cast<std::size_t>(id)]) continue;
        const Arc& a = d.arc(id);
        if (!reached[static_cast<std::size_t>(a.tail)] || reached[static_cast<std::size_t>(a.head)])
          continue;
        if (detail::extraction_step_valid(d, in_pool, in_part, id, remaining_k, root)) {
          accepted = id;
          break;
        }
      }
      if (accepted == -1)
        throw NotDecomposable("no admissible arc extends the current arborescence");
      in_part[static_cast<std::size_t>(accepted)] = 1;
      part_ids.push_back(accepted);
      reached[static_cast<std::size_t>(d.arc(accepted).head)] = 1;
      ++reached_count;
    }
    parts.emplace_back(d, part_ids);
    for (int id : part_ids) in_pool[static_cast<std::size_t>(id)] = 0;
    std::vector<int> next_pool;
    next_pool.reserve(pool_ids.size() - part_ids.size());
    for (int id : pool_ids)
      if (in_pool[static_cast<std::size_t>(id)]) next_pool.push_back(id);
    pool_ids = std::move(next_pool);
  }
  if (!detail::is_arborescence(d, pool_ids, root))
    throw NotDecomposable("final residue is not a spanning arborescence");
  parts.emplace_back(d, pool_ids);
  return parts;
}

// Structural audit of a claimed k-arborescence.
struct KArborescenceCheck {
  bool cost_ok = false;        // recorded total matches the arc costs
  bool size_ok = false;        // exactly k*(n-1) arcs
  bool degrees_ok = false;     // in-degree k everywhere but the root, 0 there
  bool connectivity_ok = false;  // k arc-disjoint root paths inside the set
  bool pair_bound_ok = false;  // at most k arcs between any vertex pair
  bool decomposable = false;   // splits into k arc-disjoint arborescences
  bool ok() const {
    return cost_ok && size_ok && degrees_ok && connectivity_ok && pair_bound_ok && decomposable;
  }
};

inline KArborescenceCheck check_k_arborescence(const KArborescence& t) {
  const Digraph& d = t.arcs.digraph();
  const int n = d.n();
  const int k = t.k;
  KArborescenceCheck r;
  r.cost_ok = t.arcs.total_cost() == t.total_cost;
  r.size_ok = static_cast<int>(t.arcs.size()) == (n > 1 ? k * (n - 1) : 0);

  std::vector<int> indeg(static_cast<std::size_t>(n), 0);
  std::map<std::pair<int, int>, int> per_pair;
  Digraph members(n);
  for (int id : t.arcs.ids()) {
    const Arc& a = t.arcs.digraph().arc(id);
    ++indeg[static_cast<std::size_t>(a.head)];
    ++per_pair[{std::min(a.tail, a.head), std::max(a.tail, a.head)}];
    members.add_arc(a.tail, a.head, a.cost);
  }
  r.degrees_ok = indeg[static_cast<std::size_t>(t.root)] == 0;
  for (int v = 0; v < n; ++v)
    if (v != t.root && indeg[static_cast<std::size_t>(v)] != k) r.degrees_ok = false;

  r.pair_bound_ok = true;
  for (const auto& [pair, count] : per_pair)
    if (count > k) r.pair_bound_ok = false;

  r.connectivity_ok = true;
  for (int v = 0; v < n && r.connectivity_ok; ++v) {
    if (v == t.root) continue;
    if (unit_max_flow(members, t.root, v).value < k) r.connectivity_ok = false;
  }

  try {
    const std::vector<ArcSet> parts = decompose(t);
    r.decomposable = static_cast<int>(parts.size()) == k;
    std::vector<int> covered;
    for (const ArcSet& part : parts) {
      if (n > 1 && !detail::is_arborescence(d, part.ids(), t.root)) r.decomposable = false;
      covered.insert(covered.end(), part.ids().begin(), part.ids().end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != t.arcs.ids()) r.decomposable = false;
  } catch (const NotDecomposable&) {
    r.decomposable = false;
  }
  return r;
}

}  // namespace fgc

#endif  // FGC_ARBORESCENCE_HPP
