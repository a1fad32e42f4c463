#ifndef FGC_CUTS_HPP
#define FGC_CUTS_HPP

#include <string>
#include <vector>

#include "fgc/digraph.hpp"
#include "fgc/instance.hpp"
#include "fgc/union_find.hpp"

namespace fgc {

namespace detail {

// Validates a vertex set and returns a membership mask. The set must be a
// proper nonempty subset of the vertices.
inline std::vector<char> proper_subset_mask(int n, const std::vector<int>& vertex_set) {
  std::vector<char> in_set(static_cast<std::size_t>(n), 0);
  int distinct = 0;
  for (int v : vertex_set) {
    if (v < 0 || v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range");
    if (!in_set[static_cast<std::size_t>(v)]) {
      in_set[static_cast<std::size_t>(v)] = 1;
      ++distinct;
    }
  }
  if (distinct == 0) throw InputError("vertex set must be nonempty");
  if (distinct == n) throw InputError("vertex set must be a proper subset of the vertices");
  return in_set;
}

}  // namespace detail

// True iff the subgraph (V, edge_subset) is connected and spans all n vertices.
inline bool is_connected(const FgcInstance& instance, const std::vector<int>& edge_subset) {
  UnionFind uf(instance.n());
  for (int id : edge_subset) {
    const Edge& e = instance.edge(id);
    uf.unite(e.u, e.v);
  }
  return uf.components() == 1;
}

// Selected edges with exactly one endpoint in S.
inline std::vector<int> undirected_cut(const FgcInstance& instance,
                                       const std::vector<int>& edge_subset,
                                       const std::vector<int>& S) {
  const std::vector<char> in_set = detail::proper_subset_mask(instance.n(), S);
  std::vector<int> cut;
  for (int id : edge_subset) {
    const Edge& e = instance.edge(id);
    if (in_set[static_cast<std::size_t>(e.u)] != in_set[static_cast<std::size_t>(e.v)])
      cut.push_back(id);
  }
  return cut;
}

// Arcs of the set whose head is in S and whose tail is outside S.
inline std::vector<int> directed_in_cut(const ArcSet& arcset, const std::vector<int>& S) {
  const std::vector<char> in_set = detail::proper_subset_mask(arcset.digraph().n(), S);
  std::vector<int> cut;
  for (int id : arcset.ids()) {
    const Arc& a = arcset.digraph().arc(id);
    if (in_set[static_cast<std::size_t>(a.head)] && !in_set[static_cast<std::size_t>(a.tail)])
      cut.push_back(id);
  }
  return cut;
}

}  // namespace fgc

#endif  // FGC_CUTS_HPP
