#ifndef FGC_FEASIBILITY_HPP
#define FGC_FEASIBILITY_HPP

#include <numeric>
#include <vector>

#include "fgc/instance.hpp"
#include "fgc/min_cut.hpp"

namespace fgc {

// A solution F is feasible iff every nonempty proper cut either contains a
// safe edge of F or at least k+1 unsafe edges of F. Decided with one global
// min-cut: give safe edges capacity k+1 and unsafe edges capacity 1, then F
// is feasible iff the min cut of (V, F) has value >= k+1. Per cut the
// capacity is (k+1)*safe + unsafe, which reaches k+1 exactly when a safe
// edge crosses or k+1 unsafe ones do.
inline bool is_feasible_solution(const FgcInstance& instance, const std::vector<int>& F) {
  const int n = instance.n();
  if (n == 1) {
    for (int id : F) instance.check_edge_id(id);
    return true;  // no nontrivial cuts
  }
  const Cost threshold = static_cast<Cost>(instance.k()) + 1;
  std::vector<WeightedEdge> capacitated;
  capacitated.reserve(F.size());
  for (int id : F) {
    const Edge& e = instance.edge(id);
    capacitated.push_back(WeightedEdge{e.u, e.v, e.safe() ? threshold : 1});
  }
  return global_min_cut(n, capacitated).value >= threshold;
}

// Instance-level pre-check: feasibility of the full edge set.
inline bool is_feasible_instance(const FgcInstance& instance) {
  std::vector<int> all(static_cast<std::size_t>(instance.m()));
  std::iota(all.begin(), all.end(), 0);
  return is_feasible_solution(instance, all);
}

// Witness for an infeasible F: a vertex set S whose cut violates the
// characterization (no safe edge and fewer than k+1 unsafe edges). Returns
// an empty vector when F is feasible.
inline std::vector<int> infeasibility_witness(const FgcInstance& instance,
                                              const std::vector<int>& F) {
  const int n = instance.n();
  if (n == 1) return {};
  const Cost threshold = static_cast<Cost>(instance.k()) + 1;
  std::vector<WeightedEdge> capacitated;
  capacitated.reserve(F.size());
  for (int id : F) {
    const Edge& e = instance.edge(id);
    capacitated.push_back(WeightedEdge{e.u, e.v, e.safe() ? threshold : 1});
  }
  MinCutResult cut = global_min_cut(n, capacitated);
  if (cut.value >= threshold) return {};
  return cut.side;
}

}  // namespace fgc

#endif  // FGC_FEASIBILITY_HPP
