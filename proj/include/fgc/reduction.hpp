#ifndef FGC_REDUCTION_HPP
#define FGC_REDUCTION_HPP

#include <algorithm>
#include <vector>

#include "fgc/digraph.hpp"
#include "fgc/instance.hpp"

namespace fgc {

// Builds the bidirected digraph D for the arborescence reduction: one
// bidirected arc pair per unsafe edge, k+1 pairs per safe edge, every arc
// costed like its source edge. Arcs are emitted grouped by edge in edge-id
// order, (u,v) before (v,u), pair copies consecutive, so arc ids are stable
// and solver tie-breaks reproduce.
//
// |A| = 2*|unsafe| + 2*(k+1)*|safe|.
inline Digraph build_digraph(const FgcInstance& instance, int k) {
  if (k < 1) throw InputError("build_digraph requires k >= 1");
  Digraph d(instance.n());
  for (const Edge& e : instance.edges()) {
    const int pairs = e.safe() ? k + 1 : 1;
    for (int copy = 0; copy < pairs; ++copy) {
      d.add_arc(e.u, e.v, e.cost, e.id);
      d.add_arc(e.v, e.u, e.cost, e.id);
    }
  }
  return d;
}

// Maps an arc set back to the edges it arises from: { e : R(e) intersects T }.
// Since every arc costs as much as its source edge and distinct edges give
// disjoint arc groups, c(result) <= sum of arc costs of T.
inline std::vector<int> map_back(const ArcSet& T) {
  std::vector<int> edge_ids;
  for (int arc_id : T.ids()) {
    const Arc& a = T.digraph().arc(arc_id);
    if (!a.source_edge)
      throw InputError("arc " + std::to_string(arc_id) + " has no source edge");
    edge_ids.push_back(*a.source_edge);
  }
  std::sort(edge_ids.begin(), edge_ids.end());
  edge_ids.erase(std::unique(edge_ids.begin(), edge_ids.end()), edge_ids.end());
  return edge_ids;
}

}  // namespace fgc

#endif  // FGC_REDUCTION_HPP
