#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfvs/ids.hpp"

namespace mfvs {

// Mixed multigraph G = (V, E, A) with identity-bearing edges and arcs.
//
// Vertices, edges and arcs live in slot vectors indexed by their id; a
// removed element leaves a dead slot behind so ids are never reused.
// Parallel edges/arcs and loops are ordinary elements.
class MixedGraph {
 public:
  struct Edge {
    VertexId u;
    VertexId v;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool is_loop() const { return u == v; }
  };

  struct Arc {
    VertexId tail;
    VertexId head;

    bool is_loop() const { return tail == head; }
  };

  MixedGraph() = default;

  VertexId add_vertex() {
    VertexId id(static_cast<std::int32_t>(alive_.size()));
    alive_.push_back(1);
    incident_.emplace_back();
    out_.emplace_back();
    in_.emplace_back();
    ++num_vertices_;
    return id;
  }

  EdgeId add_edge(VertexId u, VertexId v) {
    require_vertex(u);
    require_vertex(v);
    EdgeId id(static_cast<std::int32_t>(edges_.size()));
    edges_.push_back(Edge{u, v});
    incident_[u.index()].push_back(id);
    if (u != v) incident_[v.index()].push_back(id);
    ++num_edges_;
    return id;
  }

  ArcId add_arc(VertexId tail, VertexId head) {
    require_vertex(tail);
    require_vertex(head);
    ArcId id(static_cast<std::int32_t>(arcs_.size()));
    arcs_.push_back(Arc{tail, head});
    out_[tail.index()].push_back(id);
    in_[head.index()].push_back(id);
    ++num_arcs_;
    return id;
  }

  void remove_edge(EdgeId e) {
    const Edge ed = edge(e);
    erase_from(incident_[ed.u.index()], e);
    if (!ed.is_loop()) erase_from(incident_[ed.v.index()], e);
    edges_[e.index()].reset();
    --num_edges_;
  }

  void remove_arc(ArcId a) {
    const Arc ar = arc(a);
    erase_from(out_[ar.tail.index()], a);
    erase_from(in_[ar.head.index()], a);
    arcs_[a.index()].reset();
    --num_arcs_;
  }

  // Removes v together with every edge and arc incident with it.
  void remove_vertex(VertexId v) {
    require_vertex(v);
    while (!incident_[v.index()].empty()) remove_edge(incident_[v.index()].back());
    while (!out_[v.index()].empty()) remove_arc(out_[v.index()].back());
    while (!in_[v.index()].empty()) remove_arc(in_[v.index()].back());
    alive_[v.index()] = 0;
    --num_vertices_;
  }

  // Contracts the non-loop edge e = uv into a fresh vertex w. Every other
  // edge/arc keeps its id; endpoints equal to u or v are re-pointed at w.
  VertexId contract(EdgeId e) {
    const Edge ed = edge(e);
    if (ed.is_loop()) {
      throw InputError("contract: edge " + std::to_string(e.value) + " is a loop");
    }
    remove_edge(e);
    const VertexId w = add_vertex();
    for (VertexId x : {ed.u, ed.v}) {
      for (EdgeId f : std::vector<EdgeId>(incident_[x.index()])) {
        Edge g = edge(f);
        remove_edge(f);
        if (g.u == ed.u || g.u == ed.v) g.u = w;
        if (g.v == ed.u || g.v == ed.v) g.v = w;
        restore_edge(f, g);
      }
      for (ArcId a : std::vector<ArcId>(out_[x.index()])) relink_arc(a, ed.u, ed.v, w);
      for (ArcId a : std::vector<ArcId>(in_[x.index()])) relink_arc(a, ed.u, ed.v, w);
    }
    alive_[ed.u.index()] = 0;
    alive_[ed.v.index()] = 0;
    num_vertices_ -= 2;
    return w;
  }

  // Replaces u and its two incident non-loop edges uv, uw by a fresh edge vw.
  // u must carry no arcs. Returns the id of the new edge.
  EdgeId suppress(VertexId u) {
    require_vertex(u);
    const auto& inc = incident_[u.index()];
    if (inc.size() != 2 || edge(inc[0]).is_loop() || edge(inc[1]).is_loop()) {
      throw InputError("suppress: vertex " + std::to_string(u.value) +
                       " does not have exactly two non-loop edges");
    }
    if (!out_[u.index()].empty() || !in_[u.index()].empty()) {
      throw InputError("suppress: vertex " + std::to_string(u.value) + " has incident arcs");
    }
    const VertexId a = edge(inc[0]).other(u);
    const VertexId b = edge(inc[1]).other(u);
    remove_vertex(u);
    return add_edge(a, b);
  }

  bool has_vertex(VertexId v) const {
    return v.value >= 0 && v.index() < alive_.size() && alive_[v.index()];
  }
  bool has_edge(EdgeId e) const {
    return e.value >= 0 && e.index() < edges_.size() && edges_[e.index()].has_value();
  }
  bool has_arc(ArcId a) const {
    return a.value >= 0 && a.index() < arcs_.size() && arcs_[a.index()].has_value();
  }

  const Edge& edge(EdgeId e) const {
    if (!has_edge(e)) throw InputError("unknown edge " + std::to_string(e.value));
    return *edges_[e.index()];
  }
  const Arc& arc(ArcId a) const {
    if (!has_arc(a)) throw InputError("unknown arc " + std::to_string(a.value));
    return *arcs_[a.index()];
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return num_edges_; }
  std::size_t num_arcs() const { return num_arcs_; }

  // One past the largest vertex id ever issued; sizes dense per-vertex arrays.
  std::size_t vertex_bound() const { return alive_.size(); }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(num_vertices_);
    for (std::size_t i = 0; i < alive_.size(); ++i) {
      if (alive_[i]) out.emplace_back(static_cast<std::int32_t>(i));
    }
    return out;
  }
  VertexSet vertex_set() const {
    auto vs = vertices();
    return VertexSet(vs.begin(), vs.end());
  }
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> out;
    out.reserve(num_edges_);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i]) out.emplace_back(static_cast<std::int32_t>(i));
    }
    return out;
  }
  std::vector<ArcId> arcs() const {
    std::vector<ArcId> out;
    out.reserve(num_arcs_);
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      if (arcs_[i]) out.emplace_back(static_cast<std::int32_t>(i));
    }
    return out;
  }

  const std::vector<EdgeId>& incident_edges(VertexId v) const {
    require_vertex(v);
    return incident_[v.index()];
  }
  const std::vector<ArcId>& out_arcs(VertexId v) const {
    require_vertex(v);
    return out_[v.index()];
  }
  const std::vector<ArcId>& in_arcs(VertexId v) const {
    require_vertex(v);
    return in_[v.index()];
  }

  // d(v); a loop contributes two.
  std::size_t edge_degree(VertexId v) const {
    std::size_t d = 0;
    for (EdgeId e : incident_edges(v)) d += edge(e).is_loop() ? 2 : 1;
    return d;
  }
  std::size_t out_degree(VertexId v) const { return out_arcs(v).size(); }
  std::size_t in_degree(VertexId v) const { return in_arcs(v).size(); }

  void require_vertex(VertexId v) const {
    if (!has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v.value));
  }

 private:
  template <typename T>
  static void erase_from(std::vector<T>& list, T id) {
    auto it = std::find(list.begin(), list.end(), id);
    if (it != list.end()) list.erase(it);
  }

  void restore_edge(EdgeId e, Edge ed) {
    edges_[e.index()] = ed;
    incident_[ed.u.index()].push_back(e);
    if (!ed.is_loop()) incident_[ed.v.index()].push_back(e);
    ++num_edges_;
  }

  void relink_arc(ArcId a, VertexId u, VertexId v, VertexId w) {
    if (!has_arc(a)) return;
    Arc ar = arc(a);
    remove_arc(a);
    if (ar.tail == u || ar.tail == v) ar.tail = w;
    if (ar.head == u || ar.head == v) ar.head = w;
    arcs_[a.index()] = ar;
    out_[ar.tail.index()].push_back(a);
    in_[ar.head.index()].push_back(a);
    ++num_arcs_;
  }

  std::vector<char> alive_;
  std::vector<std::optional<Edge>> edges_;
  std::vector<std::optional<Arc>> arcs_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<std::vector<ArcId>> out_;
  std::vector<std::vector<ArcId>> in_;
  std::size_t num_vertices_ = 0;
  std::size_t num_edges_ = 0;
  std::size_t num_arcs_ = 0;
};

// Builds a graph on vertices 0..n-1. Edge and arc ids follow input order.
inline MixedGraph construct_graph(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<std::pair<int, int>>& arcs) {
  if (n < 0) throw InputError("construct_graph: negative vertex count");
  MixedGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex();
  auto check = [n](std::pair<int, int> p) {
    if (p.first < 0 || p.first >= n || p.second < 0 || p.second >= n) {
      throw InputError("construct_graph: endpoint (" + std::to_string(p.first) + "," +
                       std::to_string(p.second) + ") out of range");
    }
  };
  for (auto p : edges) {
    check(p);
    g.add_edge(VertexId(p.first), VertexId(p.second));
  }
  for (auto p : arcs) {
    check(p);
    g.add_arc(VertexId(p.first), VertexId(p.second));
  }
  return g;
}

// G - X. Surviving ids are unchanged.
inline MixedGraph delete_vertices(MixedGraph g, const VertexSet& x) {
  for (VertexId v : x) {
    if (!g.has_vertex(v)) {
      throw InputError("delete_vertices: vertex " + std::to_string(v.value) + " not in graph");
    }
  }
  for (VertexId v : x) g.remove_vertex(v);
  return g;
}

// G[X]: keeps exactly the vertices of X.
inline MixedGraph induced_subgraph(const MixedGraph& g, const VertexSet& x) {
  VertexSet drop;
  for (VertexId v : g.vertices()) {
    if (!x.contains(v)) drop.insert(v);
  }
  return delete_vertices(g, drop);
}

// G[E]: drops all arcs, then every vertex left without an incident edge.
inline MixedGraph undirected_restriction(MixedGraph g) {
  for (ArcId a : g.arcs()) g.remove_arc(a);
  for (VertexId v : g.vertices()) {
    if (g.incident_edges(v).empty()) g.remove_vertex(v);
  }
  return g;
}

inline std::pair<MixedGraph, VertexId> contract_edge(MixedGraph g, EdgeId e) {
  if (!g.has_edge(e)) throw InputError("contract_edge: unknown edge " + std::to_string(e.value));
  const VertexId w = g.contract(e);
  return {std::move(g), w};
}

inline MixedGraph suppress_vertex(MixedGraph g, VertexId u) {
  g.suppress(u);
  return g;
}

}  // namespace mfvs
