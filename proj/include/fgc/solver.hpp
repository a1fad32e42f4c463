#ifndef FGC_SOLVER_HPP
#define FGC_SOLVER_HPP

#include <algorithm>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fgc/arborescence.hpp"
#include "fgc/errors.hpp"
#include "fgc/exact.hpp"
#include "fgc/feasibility.hpp"
#include "fgc/instance.hpp"
#include "fgc/matroid_intersection.hpp"
#include "fgc/reduction.hpp"

namespace fgc {

struct FgcSolution {
  std::vector<int> edges;  // ascending edge ids
  Cost cost = 0;
  int root = 0;
  int k = 1;
  int guarantee_factor = 2;     // k + 1
  Cost arborescence_cost = 0;   // cost of the (k+1)-arborescence before mapping back
};

// Approximation pipeline: expand the instance into a digraph carrying one
// arc pair per unsafe edge and k+1 pairs per safe edge, extract a
// minimum-cost (k+1)-arborescence, and keep every edge that contributed an
// arc. The result is feasible and costs at most (k+1) times the optimum.
//
// The arborescence step is certified in-process (weight-split check plus
// structural audit); a certification failure means the solver itself
// misbehaved and throws SolverBug rather than returning a bad set.
//
// prune greedily drops edges in decreasing cost order (ties toward the
// higher id) whenever feasibility survives; the guarantee is unaffected.
inline FgcSolution solve(const FgcInstance& instance, std::optional<int> root_choice = {},
                         bool prune = false) {
  const int root = root_choice.value_or(0);
  if (root < 0 || root >= instance.n()) throw InputError("root out of range");
  const int k = instance.k();

  if (!is_feasible_instance(instance))
    throw Infeasible("the full edge set does not survive " + std::to_string(k) + " failures");

  FgcSolution solution;
  solution.root = root;
  solution.k = k;
  solution.guarantee_factor = k + 1;
  if (instance.n() == 1) return solution;

  const Digraph expanded = build_digraph(instance, k);
  KArborescenceResult found = [&] {
    try {
      return min_cost_k_arborescence(expanded, root, k + 1);
    } catch (const NoKArborescence& ex) {
      throw SolverBug(std::string("feasible instance lost its arborescence: ") + ex.what());
    }
  }();

  {
    std::vector<Cost> weights;
    weights.reserve(expanded.arcs().size());
    for (const Arc& a : expanded.arcs()) weights.push_back(a.cost);
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> heads;
    pairs.reserve(expanded.arcs().size());
    heads.reserve(expanded.arcs().size());
    for (const Arc& a : expanded.arcs()) {
      pairs.emplace_back(a.tail, a.head);
      heads.push_back(a.head);
    }
    std::vector<int> caps(static_cast<std::size_t>(expanded.n()), k + 1);
    caps[static_cast<std::size_t>(root)] = 0;
    GraphicUnionMatroid forest_side(expanded.n(), std::move(pairs), k + 1);
    PartitionMatroid degree_side(std::move(heads), std::move(caps));
    if (!verify_weight_split(forest_side, degree_side, weights,
                             found.arborescence.arcs.ids(), found.certificate))
      throw SolverBug("arborescence optimality certificate failed verification");
    if (!check_k_arborescence(found.arborescence).ok())
      throw SolverBug("arborescence structural audit failed");
  }

  solution.arborescence_cost = found.arborescence.total_cost;
  solution.edges = map_back(found.arborescence.arcs);
  solution.cost = instance.cost_of(solution.edges);
  if (solution.cost > solution.arborescence_cost)
    throw SolverBug("mapped-back edge set costs more than the arborescence");
  if (!is_feasible_solution(instance, solution.edges))
    throw SolverBug("mapped-back edge set is infeasible");

  if (prune) {
    std::vector<int> order = solution.edges;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      const Cost ca = instance.edge(a).cost;
      const Cost cb = instance.edge(b).cost;
      if (ca != cb) return ca > cb;
      return a > b;
    });
    std::vector<int> kept = solution.edges;
    for (int candidate : order) {
      std::vector<int> trial;
      trial.reserve(kept.size() - 1);
      for (int e : kept)
        if (e != candidate) trial.push_back(e);
      if (is_feasible_solution(instance, trial)) kept = std::move(trial);
    }
    solution.edges = std::move(kept);
    solution.cost = instance.cost_of(solution.edges);
  }
  return solution;
}

struct VerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool all_pass() const {
    for (const VerifyCheck& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Audits a returned solution: feasibility, internal cost consistency, and,
// when an exact optimum is supplied, the approximation guarantee plus the
// sharper bound that the arborescence costs at most twice the optimum's
// unsafe part plus (k+1) times its safe part.
inline VerifyReport verify_solution(const FgcInstance& instance, const FgcSolution& solution,
                                    const std::optional<ExactResult>& exact = {}) {
  VerifyReport report;
  auto push = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const bool feasible = is_feasible_solution(instance, solution.edges);
  push("feasible", feasible, feasible ? "survives every covered failure set" : "a failure set disconnects it");

  const Cost recomputed = instance.cost_of(solution.edges);
  push("cost_recomputed", recomputed == solution.cost,
       "stored " + std::to_string(solution.cost) + ", recomputed " + std::to_string(recomputed));

  push("cost_le_arborescence", solution.cost <= solution.arborescence_cost,
       std::to_string(solution.cost) + " vs " + std::to_string(solution.arborescence_cost));

  if (exact) {
    const Cost opt = exact->cost;
    const Cost factor = static_cast<Cost>(solution.guarantee_factor);
    push("ratio_within_factor", solution.cost <= factor * opt,
         "cost " + std::to_string(solution.cost) + ", optimum " + std::to_string(opt) +
             ", factor " + std::to_string(solution.guarantee_factor));

    Cost unsafe_part = 0;
    Cost safe_part = 0;
    for (int e : exact->edges) {
      const Edge& edge = instance.edge(e);
      (edge.safe() ? safe_part : unsafe_part) += edge.cost;
    }
    const Cost bound = 2 * unsafe_part + factor * safe_part;
    push("arborescence_cost_bound", solution.arborescence_cost <= bound,
         "arborescence " + std::to_string(solution.arborescence_cost) + " vs bound " +
             std::to_string(bound));
  }
  return report;
}

// Key-value result document, one field per line. With an exact optimum the
// opt and ratio fields are appended; ratio carries six decimals.
inline std::string solution_to_text(const FgcSolution& solution,
                                    const std::optional<ExactResult>& exact = {}) {
  std::ostringstream out;
  out << "status ok\n";
  out << "k " << solution.k << '\n';
  out << "root " << solution.root << '\n';
  out << "edges";
  for (int e : solution.edges) out << ' ' << e;
  out << '\n';
  out << "cost " << solution.cost << '\n';
  out << "arb_cost " << solution.arborescence_cost << '\n';
  out << "factor " << solution.guarantee_factor << '\n';
  if (exact) {
    out << "opt " << exact->cost << '\n';
    const double ratio = exact->cost > 0
                             ? static_cast<double>(solution.cost) / static_cast<double>(exact->cost)
                             : 1.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", ratio);
    out << "ratio " << buf << '\n';
  }
  return out.str();
}

inline std::string infeasible_to_text(int k, int root) {
  std::ostringstream out;
  out << "status infeasible\n";
  out << "k " << k << '\n';
  out << "root " << root << '\n';
  return out.str();
}

}  // namespace fgc

#endif  // FGC_SOLVER_HPP
