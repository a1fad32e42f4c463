#ifndef FGC_DIGRAPH_HPP
#define FGC_DIGRAPH_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fgc/instance.hpp"

namespace fgc {

// One arc of a directed multigraph. source_edge, when set, names the
// undirected edge this arc arises from in a bidirection reduction.
struct Arc {
  int id;
  int tail;
  int head;
  Cost cost;
  std::optional<int> source_edge;
};

// Directed multigraph on vertices 0..n-1. Arc ids are 0..|A|-1 in insertion
// order; parallel arcs allowed, self-loops rejected. Treat as frozen once
// handed to a solver.
class Digraph {
 public:
  explicit Digraph(int n) : n_(n) {
    if (n < 1) throw InputError("vertex count must be >= 1, got " + std::to_string(n));
  }

  int add_arc(int tail, int head, Cost cost, std::optional<int> source_edge = std::nullopt) {
    const int id = static_cast<int>(arcs_.size());
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
      throw InputError("arc " + std::to_string(id) + ": endpoint out of range");
    if (tail == head) throw InputError("arc " + std::to_string(id) + ": self-loop");
    if (cost < 0) throw InputError("arc " + std::to_string(id) + ": negative cost");
    arcs_.push_back(Arc{id, tail, head, cost, source_edge});
    return id;
  }

  int n() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  const Arc& arc(int id) const {
    check_arc_id(id);
    return arcs_[static_cast<std::size_t>(id)];
  }

  void check_arc_id(int id) const {
    if (id < 0 || id >= arc_count()) throw InputError("invalid arc id " + std::to_string(id));
  }

 private:
  int n_;
  std::vector<Arc> arcs_;
};

// A subset of arcs of a digraph, stored as sorted unique arc ids. Does not
// own the digraph; the digraph must outlive the set.
class ArcSet {
 public:
  ArcSet(const Digraph& digraph, std::vector<int> arc_ids)
      : digraph_(&digraph), ids_(std::move(arc_ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    for (int id : ids_) digraph.check_arc_id(id);
  }

  const Digraph& digraph() const { return *digraph_; }
  const std::vector<int>& ids() const { return ids_; }
  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }

  bool contains(int arc_id) const {
    return std::binary_search(ids_.begin(), ids_.end(), arc_id);
  }

  Cost total_cost() const {
    Cost total = 0;
    for (int id : ids_) total += digraph_->arc(id).cost;
    return total;
  }

 private:
  const Digraph* digraph_;
  std::vector<int> ids_;
};

}  // namespace fgc

#endif  // FGC_DIGRAPH_HPP
