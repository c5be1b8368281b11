#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"

namespace mfvs {

// The backbone BB(G, S): what remains of G[E] after non-S vertices of degree
// at most one are deleted and non-S vertices of degree two are suppressed.
// Every backbone edge remembers the set of original edges it stands for.
struct Backbone {
  MixedGraph bb;                              // edges only
  std::map<EdgeId, EdgeSet> path_map;         // backbone edge -> original edges
  VertexSet br;                               // branching vertices: V(bb) - S
  VertexSet s_vertices;
};

enum class BackboneOrder { kAscending, kDescending };

inline Backbone build_backbone(const MixedGraph& g, const VertexSet& s,
                               BackboneOrder order = BackboneOrder::kAscending) {
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw InputError("build_backbone: S is not a subset of V(G)");
  }
  if (!is_fvs(g, s)) throw InputError("build_backbone: S is not a feedback vertex set");

  Backbone out;
  out.s_vertices = s;
  out.bb = g;
  for (ArcId a : out.bb.arcs()) out.bb.remove_arc(a);
  for (EdgeId e : out.bb.edges()) out.path_map[e] = EdgeSet{e};

  MixedGraph& bb = out.bb;
  // Worklists of non-S vertices with degree <= 1 and degree == 2.
  auto cmp = [order](VertexId a, VertexId b) {
    return order == BackboneOrder::kAscending ? a < b : b < a;
  };
  std::set<VertexId, decltype(cmp)> low(cmp);
  std::set<VertexId, decltype(cmp)> two(cmp);
  auto classify = [&](VertexId v) {
    low.erase(v);
    two.erase(v);
    if (s.contains(v) || !bb.has_vertex(v)) return;
    const std::size_t d = bb.edge_degree(v);
    if (d <= 1) {
      low.insert(v);
    } else if (d == 2) {
      two.insert(v);
    }
  };
  for (VertexId v : bb.vertices()) classify(v);

  while (!low.empty() || !two.empty()) {
    if (!low.empty()) {
      const VertexId v = *low.begin();
      low.erase(low.begin());
      std::vector<VertexId> neighbours;
      for (EdgeId e : bb.incident_edges(v)) {
        neighbours.push_back(bb.edge(e).other(v));
        out.path_map.erase(e);
      }
      bb.remove_vertex(v);
      for (VertexId x : neighbours) classify(x);
      continue;
    }
    const VertexId u = *two.begin();
    two.erase(two.begin());
    const auto inc = bb.incident_edges(u);
    if (inc.size() != 2) {
      // A single loop at a non-S vertex would be a cycle avoiding S.
      throw InvariantError("build_backbone: loop at a non-S vertex");
    }
    EdgeSet merged = out.path_map.at(inc[0]);
    const EdgeSet& second = out.path_map.at(inc[1]);
    merged.insert(second.begin(), second.end());
    const VertexId a = bb.edge(inc[0]).other(u);
    const VertexId b = bb.edge(inc[1]).other(u);
    out.path_map.erase(inc[0]);
    out.path_map.erase(inc[1]);
    const EdgeId fresh = bb.suppress(u);
    out.path_map.emplace(fresh, std::move(merged));
    classify(a);
    classify(b);
  }

  for (VertexId v : bb.vertices()) {
    if (!s.contains(v)) out.br.insert(v);
  }
  return out;
}

// One entry per connection path: the backbone edge and its original edges.
inline std::vector<std::pair<EdgeId, EdgeSet>> connection_paths(const Backbone& b) {
  return {b.path_map.begin(), b.path_map.end()};
}

// Vertices of G touched by the edges of `path` (endpoints included).
inline VertexSet path_vertices(const MixedGraph& g, const EdgeSet& path) {
  VertexSet out;
  for (EdgeId e : path) {
    const auto& ed = g.edge(e);
    out.insert(ed.u);
    out.insert(ed.v);
  }
  return out;
}

}  // namespace mfvs
