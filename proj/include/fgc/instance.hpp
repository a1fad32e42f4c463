#ifndef FGC_INSTANCE_HPP
#define FGC_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fgc/errors.hpp"

namespace fgc {

using Cost = std::int64_t;

// Per-edge cost cap. Together with the m*(k+1) cap below it guarantees that
// every cost sum computed anywhere in the library fits in a signed 64-bit
// integer, so optimality certificates are exact.
inline constexpr Cost kMaxEdgeCost = Cost{1} << 40;
inline constexpr std::int64_t kMaxEdgeBudget = std::int64_t{1} << 21;  // cap on m*(k+1)

enum class Safety { Safe, Unsafe };

// One undirected edge of a multigraph. Parallel edges are distinct objects
// distinguished by id; self-loops are not representable (u != v enforced).
struct Edge {
  int id;
  int u;
  int v;
  Cost cost;
  Safety safety;

  bool safe() const { return safety == Safety::Safe; }
};

// Input description of an edge, before ids are assigned.
struct EdgeSpec {
  int u;
  int v;
  Cost cost;
  Safety safety;
};

// An instance of the k-flexible-connectivity problem: an undirected
// multigraph on vertices 0..n-1 with a safe/unsafe flag and a nonnegative
// integer cost per edge, plus the robustness parameter k >= 1.
//
// Immutable after construction. Edge ids are 0..m-1 in list order.
class FgcInstance {
 public:
  FgcInstance(int n, int k, const std::vector<EdgeSpec>& edge_specs) : n_(n), k_(k) {
    if (n < 1) throw InputError("vertex count must be >= 1, got " + std::to_string(n));
    if (k < 1) throw InputError("k must be >= 1, got " + std::to_string(k));
    const auto m = static_cast<std::int64_t>(edge_specs.size());
    if (m * (k + 1) > kMaxEdgeBudget)
      throw InputError("m*(k+1) exceeds " + std::to_string(kMaxEdgeBudget) +
                       "; cost sums could overflow");
    edges_.reserve(edge_specs.size());
    for (const EdgeSpec& s : edge_specs) {
      const int id = static_cast<int>(edges_.size());
      if (s.u < 0 || s.u >= n || s.v < 0 || s.v >= n)
        throw InputError("edge " + std::to_string(id) + ": endpoint out of range");
      if (s.u == s.v) throw InputError("edge " + std::to_string(id) + ": self-loop");
      if (s.cost < 0) throw InputError("edge " + std::to_string(id) + ": negative cost");
      if (s.cost > kMaxEdgeCost)
        throw InputError("edge " + std::to_string(id) + ": cost exceeds 2^40");
      edges_.push_back(Edge{id, s.u, s.v, s.cost, s.safety});
    }
  }

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  const Edge& edge(int id) const {
    check_edge_id(id);
    return edges_[static_cast<std::size_t>(id)];
  }

  void check_edge_id(int id) const {
    if (id < 0 || id >= m()) throw InputError("invalid edge id " + std::to_string(id));
  }

  Cost cost_of(const std::vector<int>& edge_ids) const {
    Cost total = 0;
    for (int id : edge_ids) total += edge(id).cost;
    return total;
  }

 private:
  int n_;
  int k_;
  std::vector<Edge> edges_;
};

}  // namespace fgc

#endif  // FGC_INSTANCE_HPP
