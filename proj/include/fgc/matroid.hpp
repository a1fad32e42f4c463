#ifndef FGC_MATROID_HPP
#define FGC_MATROID_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fgc/errors.hpp"
#include "fgc/union_find.hpp"

namespace fgc {

// Independence oracle over ground set 0..ground_size()-1 carrying a mutable
// current set. Drivers grow and shrink the current set through add/remove;
// can_add and circuit answer relative to the current set.
class Matroid {
 public:
  virtual ~Matroid() = default;
  virtual int ground_size() const = 0;
  virtual void reset() = 0;
  virtual bool contains(int e) const = 0;
  // current + e independent? Pre: !contains(e).
  virtual bool can_add(int e) = 0;
  // Pre: can_add(e) would hold (the current set plus e is independent).
  virtual void add(int e) = 0;
  // Pre: contains(e).
  virtual void remove(int e) = 0;
  // The x in the current set with current - x + e independent, ascending.
  // Meaningful when can_add(e) is false; empty means e is a loop (never
  // addable by any exchange).
  virtual std::vector<int> circuit(int e) = 0;
};

// Every subset independent.
class FreeMatroid : public Matroid {
 public:
  explicit FreeMatroid(int ground) : in_(static_cast<std::size_t>(ground), 0) {}
  int ground_size() const override { return static_cast<int>(in_.size()); }
  void reset() override { std::fill(in_.begin(), in_.end(), 0); }
  bool contains(int e) const override { return in_[static_cast<std::size_t>(e)] != 0; }
  bool can_add(int) override { return true; }
  void add(int e) override { in_[static_cast<std::size_t>(e)] = 1; }
  void remove(int e) override { in_[static_cast<std::size_t>(e)] = 0; }
  std::vector<int> circuit(int) override { return {}; }

 private:
  std::vector<char> in_;
};

// Independent iff the set has at most `rank` elements.
class UniformMatroid : public Matroid {
 public:
  UniformMatroid(int ground, int rank) : in_(static_cast<std::size_t>(ground), 0), rank_(rank) {
    if (rank < 0) throw InputError("uniform matroid rank must be >= 0");
  }
  int ground_size() const override { return static_cast<int>(in_.size()); }
  void reset() override {
    std::fill(in_.begin(), in_.end(), 0);
    count_ = 0;
  }
  bool contains(int e) const override { return in_[static_cast<std::size_t>(e)] != 0; }
  bool can_add(int) override { return count_ < rank_; }
  void add(int e) override {
    in_[static_cast<std::size_t>(e)] = 1;
    ++count_;
  }
  void remove(int e) override {
    in_[static_cast<std::size_t>(e)] = 0;
    --count_;
  }
  std::vector<int> circuit(int) override {
    std::vector<int> members;
    for (int e = 0; e < ground_size(); ++e)
      if (in_[static_cast<std::size_t>(e)]) members.push_back(e);
    return members;
  }

 private:
  std::vector<char> in_;
  int rank_;
  int count_ = 0;
};

// Each element belongs to one class; at most capacity[c] elements of class c.
class PartitionMatroid : public Matroid {
 public:
  PartitionMatroid(std::vector<int> class_of, std::vector<int> capacity)
      : class_of_(std::move(class_of)),
        capacity_(std::move(capacity)),
        members_(capacity_.size()),
        in_(class_of_.size(), 0) {
    for (int cls : class_of_)
      if (cls < 0 || cls >= static_cast<int>(capacity_.size()))
        throw InputError("partition matroid class out of range");
    for (int cap : capacity_)
      if (cap < 0) throw InputError("partition matroid capacity must be >= 0");
  }

  int ground_size() const override { return static_cast<int>(class_of_.size()); }
  void reset() override {
    for (auto& m : members_) m.clear();
    std::fill(in_.begin(), in_.end(), 0);
  }
  bool contains(int e) const override { return in_[static_cast<std::size_t>(e)] != 0; }
  bool can_add(int e) override {
    const int cls = class_of_[static_cast<std::size_t>(e)];
    return static_cast<int>(members_[static_cast<std::size_t>(cls)].size()) <
           capacity_[static_cast<std::size_t>(cls)];
  }
  void add(int e) override {
    auto& m = members_[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(e)])];
    m.insert(std::lower_bound(m.begin(), m.end(), e), e);
    in_[static_cast<std::size_t>(e)] = 1;
  }
  void remove(int e) override {
    auto& m = members_[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(e)])];
    m.erase(std::lower_bound(m.begin(), m.end(), e));
    in_[static_cast<std::size_t>(e)] = 0;
  }
  std::vector<int> circuit(int e) override {
    return members_[static_cast<std::size_t>(class_of_[static_cast<std::size_t>(e)])];
  }

 private:
  std::vector<int> class_of_;
  std::vector<int> capacity_;
  std::vector<std::vector<int>> members_;
  std::vector<char> in_;
};

// k-fold union of the graphic matroid of an undirected multigraph: a set of
// elements is independent iff its edge multiset partitions into k forests
// (equivalently, by Nash-Williams, every vertex set S induces at most
// k*(|S|-1) of its edges).
//
// The current set is kept as an explicit coloring into k forests. Adding an
// element runs the matroid-union augmenting search (recolor a chain of edges
// to free a slot); circuits come from the minimal "tight" vertex set
// containing the new element's endpoints, i.e. the least set on which every
// color class induces a spanning tree. current - x + e is independent
// exactly for the x induced on that set.
class GraphicUnionMatroid : public Matroid {
 public:
  GraphicUnionMatroid(int n, std::vector<std::pair<int, int>> endpoints, int k)
      : n_(n), k_(k), ends_(std::move(endpoints)) {
    if (n < 1) throw InputError("graphic union matroid needs n >= 1");
    if (k < 1) throw InputError("graphic union matroid needs k >= 1");
    for (const auto& [u, v] : ends_) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw InputError("graphic union matroid endpoint out of range");
      if (u == v) throw InputError("graphic union matroid: self-loop element");
    }
    const std::size_t g = ends_.size();
    in_.assign(g, 0);
    color_of_.assign(g, -1);
    adj_.assign(static_cast<std::size_t>(k), std::vector<std::vector<std::pair<int, int>>>(
                                                 static_cast<std::size_t>(n)));
    dsu_.assign(static_cast<std::size_t>(k), UnionFind(n));
    dsu_dirty_.assign(static_cast<std::size_t>(k), 1);
    elem_seen_.assign(g, 0);
    vert_seen_.assign(static_cast<std::size_t>(n), 0);
    vert_mark_.assign(static_cast<std::size_t>(n), 0);
    parent_vert_.assign(static_cast<std::size_t>(n), -1);
    parent_elem_.assign(static_cast<std::size_t>(n), -1);
  }

  int ground_size() const override { return static_cast<int>(ends_.size()); }

  void reset() override {
    std::fill(in_.begin(), in_.end(), 0);
    std::fill(color_of_.begin(), color_of_.end(), -1);
    for (auto& per_vertex : adj_)
      for (auto& list : per_vertex) list.clear();
    touch();
  }

  bool contains(int e) const override { return in_[static_cast<std::size_t>(e)] != 0; }

  bool can_add(int e) override { return lookup(e).independent; }

  std::vector<int> circuit(int e) override { return lookup(e).circ; }

  void add(int e) override {
    if (contains(e)) throw InputError("graphic union add: element already present");
    if (!try_place(e))
      throw SolverBug("graphic union matroid: add() on a dependent element");
    in_[static_cast<std::size_t>(e)] = 1;
    touch();
  }

  void remove(int e) override {
    if (!contains(e)) throw InputError("graphic union remove: element not present");
    detach(e);
    in_[static_cast<std::size_t>(e)] = 0;
    touch();
  }

  // Test hook: every color class must be a forest covering exactly the
  // current elements.
  bool coloring_valid() {
    std::size_t colored = 0;
    for (int e = 0; e < ground_size(); ++e) {
      const bool in = in_[static_cast<std::size_t>(e)] != 0;
      const bool has_color = color_of_[static_cast<std::size_t>(e)] >= 0;
      if (in != has_color) return false;
      if (in) ++colored;
    }
    std::size_t adj_total = 0;
    for (int c = 0; c < k_; ++c) {
      UnionFind uf(n_);
      for (int v = 0; v < n_; ++v)
        for (const auto& [to, elem] : adj_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)]) {
          ++adj_total;
          if (v < to) {
            if (color_of_[static_cast<std::size_t>(elem)] != c) return false;
            if (!uf.unite(v, to)) return false;  // cycle in a color class
          }
        }
    }
    return adj_total == 2 * colored;
  }

 private:
  struct CacheEntry {
    bool independent;
    std::vector<int> circ;
  };

  void touch() {
    pair_cache_.clear();
    std::fill(dsu_dirty_.begin(), dsu_dirty_.end(), 1);
  }

  void attach(int e, int color) {
    color_of_[static_cast<std::size_t>(e)] = color;
    const auto [u, v] = ends_[static_cast<std::size_t>(e)];
    adj_[static_cast<std::size_t>(color)][static_cast<std::size_t>(u)].push_back({v, e});
    adj_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)].push_back({u, e});
  }

  void detach(int e) {
    const int color = color_of_[static_cast<std::size_t>(e)];
    const auto [u, v] = ends_[static_cast<std::size_t>(e)];
    auto drop = [&](int at) {
      auto& list = adj_[static_cast<std::size_t>(color)][static_cast<std::size_t>(at)];
      for (std::size_t i = 0; i < list.size(); ++i)
        if (list[i].second == e) {
          list[i] = list.back();
          list.pop_back();
          return;
        }
    };
    drop(u);
    drop(v);
    color_of_[static_cast<std::size_t>(e)] = -1;
  }

  UnionFind& forest_dsu(int color) {
    if (dsu_dirty_[static_cast<std::size_t>(color)]) {
      dsu_[static_cast<std::size_t>(color)] = UnionFind(n_);
      auto& uf = dsu_[static_cast<std::size_t>(color)];
      for (int v = 0; v < n_; ++v)
        for (const auto& [to, elem] : adj_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)])
          if (v < to) uf.unite(v, to);
      dsu_dirty_[static_cast<std::size_t>(color)] = 0;
    }
    return dsu_[static_cast<std::size_t>(color)];
  }

  // Tree path between the endpoints of e in the given color, as element ids.
  // Pre: endpoints connected in that color.
  std::vector<int> tree_path(int color, int from, int to) {
    ++vert_epoch_;
    std::queue<int> q;
    vert_seen_[static_cast<std::size_t>(from)] = vert_epoch_;
    parent_vert_[static_cast<std::size_t>(from)] = -1;
    q.push(from);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      if (v == to) break;
      for (const auto& [next, elem] : adj_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)]) {
        if (vert_seen_[static_cast<std::size_t>(next)] == vert_epoch_) continue;
        vert_seen_[static_cast<std::size_t>(next)] = vert_epoch_;
        parent_vert_[static_cast<std::size_t>(next)] = v;
        parent_elem_[static_cast<std::size_t>(next)] = elem;
        q.push(next);
      }
    }
    std::vector<int> path;
    for (int v = to; parent_vert_[static_cast<std::size_t>(v)] != -1; v = parent_vert_[static_cast<std::size_t>(v)])
      path.push_back(parent_elem_[static_cast<std::size_t>(v)]);
    return path;
  }

  // Matroid-union augmenting search: place e0, recoloring a chain of current
  // elements if needed. Commits and returns true on success.
  bool try_place(int e0) {
    const int g = ground_size();
    ++elem_epoch_;
    std::vector<int> chain_parent(static_cast<std::size_t>(g), -1);
    std::vector<int> chain_color(static_cast<std::size_t>(g), -1);
    std::queue<int> q;
    elem_seen_[static_cast<std::size_t>(e0)] = elem_epoch_;
    q.push(e0);
    while (!q.empty()) {
      const int e = q.front();
      q.pop();
      const auto [u, v] = ends_[static_cast<std::size_t>(e)];
      for (int c = 0; c < k_; ++c) {
        if (!forest_dsu(c).same(u, v)) {
          commit_chain(e, c, e0, chain_parent, chain_color);
          return true;
        }
        for (int x : tree_path(c, u, v)) {
          if (elem_seen_[static_cast<std::size_t>(x)] == elem_epoch_) continue;
          elem_seen_[static_cast<std::size_t>(x)] = elem_epoch_;
          chain_parent[static_cast<std::size_t>(x)] = e;
          chain_color[static_cast<std::size_t>(x)] = c;
          q.push(x);
        }
      }
    }
    return false;
  }

  void commit_chain(int success_elem, int free_color, int e0,
                    const std::vector<int>& chain_parent, const std::vector<int>& chain_color) {
    int cur = success_elem;
    int into = free_color;
    while (true) {
      if (cur != e0) detach(cur);
      attach(cur, into);
      // attach/detach invalidate the same-tree structure for later queries
      dsu_dirty_[static_cast<std::size_t>(into)] = 1;
      if (cur == e0) break;
      into = chain_color[static_cast<std::size_t>(cur)];
      dsu_dirty_[static_cast<std::size_t>(into)] = 1;
      cur = chain_parent[static_cast<std::size_t>(cur)];
    }
  }

  // Parents of the color-c tree component containing root, toward root.
  void ensure_component_parents(int color, int root, std::vector<int>& parent) {
    ++vert_epoch_;
    std::queue<int> q;
    vert_seen_[static_cast<std::size_t>(root)] = vert_epoch_;
    parent[static_cast<std::size_t>(root)] = -1;
    q.push(root);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (const auto& [next, elem] : adj_[static_cast<std::size_t>(color)][static_cast<std::size_t>(v)]) {
        (void)elem;
        if (vert_seen_[static_cast<std::size_t>(next)] == vert_epoch_) continue;
        vert_seen_[static_cast<std::size_t>(next)] = vert_epoch_;
        parent[static_cast<std::size_t>(next)] = v;
        q.push(next);
      }
    }
  }

  // Least vertex set containing {u, v} on which every color class induces a
  // spanning tree, or nullopt when no such set exists (then current + e is
  // independent). Leaves the set marked in vert_mark_ with mark_epoch_.
  std::optional<std::vector<int>> tight_closure(int u, int v) {
    ++mark_epoch_;
    std::vector<int> members{u, v};
    vert_mark_[static_cast<std::size_t>(u)] = mark_epoch_;
    vert_mark_[static_cast<std::size_t>(v)] = mark_epoch_;
    std::vector<std::vector<int>> parents(static_cast<std::size_t>(k_));
    std::vector<char> parents_ready(static_cast<std::size_t>(k_), 0);
    std::vector<std::size_t> walked(static_cast<std::size_t>(k_), 0);
    bool changed = true;
    while (changed) {
      changed = false;
      for (int c = 0; c < k_; ++c) {
        UnionFind& uf = forest_dsu(c);
        const int rep = uf.find(members[0]);
        for (std::size_t i = 1; i < members.size(); ++i)
          if (uf.find(members[i]) != rep) return std::nullopt;
        if (!parents_ready[static_cast<std::size_t>(c)]) {
          parents[static_cast<std::size_t>(c)].assign(static_cast<std::size_t>(n_), -1);
          ensure_component_parents(c, members[0], parents[static_cast<std::size_t>(c)]);
          parents_ready[static_cast<std::size_t>(c)] = 1;
        }
        const auto& par = parents[static_cast<std::size_t>(c)];
        for (std::size_t i = walked[static_cast<std::size_t>(c)]; i < members.size(); ++i) {
          int cur = par[static_cast<std::size_t>(members[i])];
          while (cur != -1 && vert_mark_[static_cast<std::size_t>(cur)] != mark_epoch_) {
            vert_mark_[static_cast<std::size_t>(cur)] = mark_epoch_;
            members.push_back(cur);
            changed = true;
            cur = par[static_cast<std::size_t>(cur)];
          }
        }
        walked[static_cast<std::size_t>(c)] = members.size();
      }
    }
    return members;
  }

  const CacheEntry& lookup(int e) {
    const auto [u, v] = ends_[static_cast<std::size_t>(e)];
    const long long key =
        static_cast<long long>(std::min(u, v)) * n_ + std::max(u, v);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return it->second;
    CacheEntry entry;
    auto tight = tight_closure(u, v);
    if (!tight) {
      entry.independent = true;
    } else {
      entry.independent = false;
      // Every current element inside the tight set is exchangeable with e.
      for (int x = 0; x < ground_size(); ++x) {
        if (!in_[static_cast<std::size_t>(x)]) continue;
        const auto [a, b] = ends_[static_cast<std::size_t>(x)];
        if (vert_mark_[static_cast<std::size_t>(a)] == mark_epoch_ &&
            vert_mark_[static_cast<std::size_t>(b)] == mark_epoch_)
          entry.circ.push_back(x);
      }
    }
    return pair_cache_.emplace(key, std::move(entry)).first->second;
  }

  int n_;
  int k_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<char> in_;
  std::vector<int> color_of_;
  // adj_[color][vertex] = (neighbor, element)
  std::vector<std::vector<std::vector<std::pair<int, int>>>> adj_;
  std::vector<UnionFind> dsu_;
  std::vector<char> dsu_dirty_;
  std::unordered_map<long long, CacheEntry> pair_cache_;
  std::vector<std::uint32_t> elem_seen_;
  std::uint32_t elem_epoch_ = 0;
  std::vector<std::uint32_t> vert_seen_;
  std::uint32_t vert_epoch_ = 0;
  std::vector<std::uint32_t> vert_mark_;
  std::uint32_t mark_epoch_ = 0;
  std::vector<int> parent_vert_;
  std::vector<int> parent_elem_;
};

// True iff the edge multiset partitions into k forests. A self-loop makes
// the multiset dependent outright.
inline bool forest_union_independent(const std::vector<std::pair<int, int>>& edges, int k) {
  if (k < 1) throw InputError("forest_union_independent requires k >= 1");
  int n = 0;
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0) throw InputError("negative vertex id");
    if (u == v) return false;
    n = std::max(n, std::max(u, v) + 1);
  }
  if (edges.empty()) return true;
  GraphicUnionMatroid m(n, edges, k);
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    if (!m.can_add(e)) return false;
    m.add(e);
  }
  return true;
}

}  // namespace fgc

#endif  // FGC_MATROID_HPP
