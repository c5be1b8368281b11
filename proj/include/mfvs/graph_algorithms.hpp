#pragma once

#include <deque>
#include <numeric>
#include <queue>
#include <vector>

#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"

namespace mfvs {

namespace detail {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if a and b were already joined.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Decides whether G contains a cycle in the mixed sense: loops, two distinct
// parallel edges, an edge together with any arc on the same pair, and longer
// cycles whose arcs all point the same way.
//
// If G[E] has an undirected cycle we are done. Otherwise G[E] is a forest and
// a cycle through some arc exists iff the digraph obtained by contracting every
// tree of G[E] to a node has a loop or a directed cycle.
inline bool has_cycle(const MixedGraph& g) {
  const std::size_t bound = g.vertex_bound();
  detail::DisjointSets trees(bound);
  for (EdgeId e : g.edges()) {
    const auto& ed = g.edge(e);
    if (!trees.unite(ed.u.index(), ed.v.index())) return true;
  }

  std::vector<std::vector<std::size_t>> quotient(bound);
  std::vector<int> indegree(bound, 0);
  for (ArcId a : g.arcs()) {
    const auto& ar = g.arc(a);
    const std::size_t from = trees.find(ar.tail.index());
    const std::size_t to = trees.find(ar.head.index());
    if (from == to) return true;
    quotient[from].push_back(to);
    ++indegree[to];
  }

  std::vector<std::size_t> ready;
  std::size_t nodes = 0;
  for (VertexId v : g.vertices()) {
    if (trees.find(v.index()) != v.index()) continue;
    ++nodes;
    if (indegree[v.index()] == 0) ready.push_back(v.index());
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const std::size_t x = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t y : quotient[x]) {
      if (--indegree[y] == 0) ready.push_back(y);
    }
  }
  return removed != nodes;
}

// All vertices reachable from u by walks that traverse edges either way and
// arcs forward. Includes u.
inline VertexSet reachable_set(const MixedGraph& g, VertexId u) {
  if (!g.has_vertex(u)) {
    throw InputError("reachable_set: vertex " + std::to_string(u.value) + " not in graph");
  }
  std::vector<char> seen(g.vertex_bound(), 0);
  std::deque<VertexId> queue{u};
  seen[u.index()] = 1;
  VertexSet out{u};
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    auto visit = [&](VertexId y) {
      if (!seen[y.index()]) {
        seen[y.index()] = 1;
        out.insert(y);
        queue.push_back(y);
      }
    };
    for (EdgeId e : g.incident_edges(x)) visit(g.edge(e).other(x));
    for (ArcId a : g.out_arcs(x)) visit(g.arc(a).head);
  }
  return out;
}

// The partial order on V - S where u precedes v iff v reaches u in G - S but
// u does not reach v.
class PrecedenceRelation {
 public:
  PrecedenceRelation() = default;
  PrecedenceRelation(std::vector<VertexId> ground, std::vector<std::vector<char>> less)
      : ground_(std::move(ground)), less_(std::move(less)) {
    position_.assign(ground_.empty() ? 0 : ground_.back().index() + 1, -1);
    for (std::size_t i = 0; i < ground_.size(); ++i) position_[ground_[i].index()] = static_cast<int>(i);
  }

  const std::vector<VertexId>& ground() const { return ground_; }

  bool contains(VertexId v) const {
    return v.value >= 0 && v.index() < position_.size() && position_[v.index()] >= 0;
  }

  bool precedes(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) {
      throw InputError("precedes: vertex outside the ground set");
    }
    return less_[position_[u.index()]][position_[v.index()]] != 0;
  }

 private:
  std::vector<VertexId> ground_;
  std::vector<std::vector<char>> less_;
  std::vector<int> position_;
};

inline PrecedenceRelation precedes_relation(const MixedGraph& g, const VertexSet& s) {
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw InputError("precedes_relation: S is not a subset of V(G)");
  }
  const MixedGraph rest = delete_vertices(g, s);
  std::vector<VertexId> ground = rest.vertices();
  std::vector<VertexSet> reach;
  reach.reserve(ground.size());
  for (VertexId v : ground) reach.push_back(reachable_set(rest, v));

  const std::size_t n = ground.size();
  std::vector<std::vector<char>> less(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // ground[i] precedes ground[j]: j reaches i, i does not reach j.
      less[i][j] = reach[j].contains(ground[i]) && !reach[i].contains(ground[j]);
    }
  }
  return PrecedenceRelation(std::move(ground), std::move(less));
}

inline bool is_fvs(const MixedGraph& g, const VertexSet& x) {
  return !has_cycle(delete_vertices(g, x));
}

// True iff C is an undirected multiway cut for S: no two distinct S-vertices
// are joined by an edge-only path avoiding C.
inline bool is_umc(const MixedGraph& g, const VertexSet& s, const VertexSet& c) {
  if (intersects(c, s)) throw InputError("is_umc: C intersects S");
  detail::DisjointSets comps(g.vertex_bound());
  for (EdgeId e : g.edges()) {
    const auto& ed = g.edge(e);
    if (c.contains(ed.u) || c.contains(ed.v)) continue;
    comps.unite(ed.u.index(), ed.v.index());
  }
  std::vector<char> taken(g.vertex_bound(), 0);
  for (VertexId v : s) {
    if (!g.has_vertex(v)) continue;
    const std::size_t root = comps.find(v.index());
    if (taken[root]) return false;
    taken[root] = 1;
  }
  return true;
}

}  // namespace mfvs
