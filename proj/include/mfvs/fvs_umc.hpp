#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <vector>

#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"
#include "mfvs/skew_separator.hpp"

namespace mfvs {

// Find S' disjoint from S, |S'| <= budget, that is a FVS of `graph` and an
// undirected multiway cut for S. `s` must itself be a FVS of `graph`.
struct FvsUmcInstance {
  MixedGraph graph;
  VertexSet s;
  int budget = 1;
};

// sigma(i) = order[i - 1].
struct Numbering {
  std::vector<VertexId> order;

  bool operator==(const Numbering&) const = default;
};

struct PreprocessOutcome {
  FvsUmcInstance reduced;
  VertexSet forced;
  bool infeasible = false;
};

namespace detail {

// G[S] has an edge (loops included) or some cycle.
inline bool terminal_part_is_bad(const MixedGraph& g, const VertexSet& s) {
  for (EdgeId e : g.edges()) {
    const auto& ed = g.edge(e);
    if (s.contains(ed.u) && s.contains(ed.v)) return true;
  }
  return has_cycle(induced_subgraph(g, s));
}

// Smallest non-S vertex that every solution must contain, if any: a vertex
// with a loop, a vertex on a 2-cycle with an S-vertex, or a vertex with
// edges to two distinct S-vertices.
inline std::optional<VertexId> forced_vertex(const MixedGraph& g, const VertexSet& s) {
  for (VertexId v : g.vertices()) {
    if (s.contains(v)) continue;
    std::map<VertexId, int> edges_to, arcs_to, arcs_from;
    for (EdgeId e : g.incident_edges(v)) {
      const VertexId w = g.edge(e).other(v);
      if (w == v) return v;
      if (s.contains(w)) ++edges_to[w];
    }
    for (ArcId a : g.out_arcs(v)) {
      const VertexId w = g.arc(a).head;
      if (w == v) return v;
      if (s.contains(w)) ++arcs_to[w];
    }
    for (ArcId a : g.in_arcs(v)) {
      const VertexId w = g.arc(a).tail;
      if (s.contains(w)) ++arcs_from[w];
    }
    if (edges_to.size() >= 2) return v;
    for (VertexId w : s) {
      const int e = edges_to.contains(w) ? edges_to[w] : 0;
      const int out = arcs_to.contains(w) ? arcs_to[w] : 0;
      const int in = arcs_from.contains(w) ? arcs_from[w] : 0;
      // Two distinct elements close a cycle v, w, v unless both are arcs in
      // the same direction.
      if (e >= 2 || (e >= 1 && out + in >= 1) || (out >= 1 && in >= 1)) return v;
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline PreprocessOutcome preprocess_fvs_umc(const FvsUmcInstance& inst) {
  PreprocessOutcome out;
  if (detail::terminal_part_is_bad(inst.graph, inst.s)) {
    out.infeasible = true;
    return out;
  }
  out.reduced = inst;
  while (auto v = detail::forced_vertex(out.reduced.graph, out.reduced.s)) {
    if (out.reduced.budget <= 0) {
      out.infeasible = true;
      return out;
    }
    out.reduced.graph.remove_vertex(*v);
    --out.reduced.budget;
    out.forced.insert(*v);
  }
  return out;
}

inline std::vector<Numbering> arc_compatible_numberings(const MixedGraph& g, const VertexSet& s) {
  std::vector<VertexId> order(s.begin(), s.end());
  std::vector<Numbering> out;
  do {
    std::map<VertexId, std::size_t> position;
    for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
    bool ok = true;
    for (ArcId a : g.arcs()) {
      const auto& ar = g.arc(a);
      auto from = position.find(ar.tail);
      auto to = position.find(ar.head);
      if (from != position.end() && to != position.end() && from->second > to->second) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(Numbering{order});
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

// Edge neighbours of v ordered by a linear extension of the precedence
// relation (predecessors first), ties broken by smallest id.
inline std::vector<VertexId> ordered_edge_neighbours(const MixedGraph& g, VertexId v,
                                                     const PrecedenceRelation& prec) {
  std::vector<VertexId> ws;
  for (EdgeId e : g.incident_edges(v)) ws.push_back(g.edge(e).other(v));
  std::sort(ws.begin(), ws.end());
  const std::size_t d = ws.size();
  std::vector<int> pending(d, 0);
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      if (x != y && prec.precedes(ws[y], ws[x])) ++pending[x];
    }
  }
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t x = 0; x < d; ++x) {
    if (pending[x] == 0) ready.push(x);
  }
  std::vector<VertexId> out;
  while (!ready.empty()) {
    const std::size_t x = ready.top();
    ready.pop();
    out.push_back(ws[x]);
    for (std::size_t y = 0; y < d; ++y) {
      if (y != x && prec.precedes(ws[x], ws[y]) && --pending[y] == 0) ready.push(y);
    }
  }
  if (out.size() != d) throw InvariantError("precedence relation is not acyclic");
  return out;
}

namespace detail {

inline void check_gss_preconditions(const MixedGraph& g, const VertexSet& s, const Numbering& sigma) {
  VertexSet listed(sigma.order.begin(), sigma.order.end());
  if (listed != s || sigma.order.size() != s.size()) {
    throw InputError("build_gss: numbering is not a bijection onto S");
  }
  for (EdgeId e : g.edges()) {
    const auto& ed = g.edge(e);
    if (ed.is_loop()) throw InputError("build_gss: graph has a loop");
    if (s.contains(ed.u) && s.contains(ed.v)) throw InputError("build_gss: edge inside S");
  }
  for (ArcId a : g.arcs()) {
    if (g.arc(a).is_loop()) throw InputError("build_gss: graph has a loop");
  }
  // No 2-cycles: a pair joined by two edges, by an edge and an arc, or by two
  // opposite arcs.
  std::map<std::pair<VertexId, VertexId>, int> edges, arcs;
  for (EdgeId e : g.edges()) {
    const auto& ed = g.edge(e);
    ++edges[std::minmax(ed.u, ed.v)];
  }
  for (ArcId a : g.arcs()) ++arcs[{g.arc(a).tail, g.arc(a).head}];
  for (const auto& [pair, count] : edges) {
    const int along = arcs.contains(pair) ? arcs[pair] : 0;
    const std::pair<VertexId, VertexId> rev{pair.second, pair.first};
    const int against = arcs.contains(rev) ? arcs[rev] : 0;
    if (count >= 2 || along + against >= 1) throw InputError("build_gss: graph has a 2-cycle");
  }
  for (const auto& [pair, count] : arcs) {
    if (arcs.contains({pair.second, pair.first})) throw InputError("build_gss: graph has a 2-cycle");
  }
  std::map<VertexId, std::size_t> position;
  for (std::size_t i = 0; i < sigma.order.size(); ++i) position[sigma.order[i]] = i;
  for (ArcId a : g.arcs()) {
    const auto& ar = g.arc(a);
    if (s.contains(ar.tail) && s.contains(ar.head) && position[ar.tail] > position[ar.head]) {
      throw InputError("build_gss: numbering is not arc-compatible");
    }
  }
}

inline SkewInstance build_gss(const MixedGraph& g, const VertexSet& s, const Numbering& sigma,
                              const PrecedenceRelation& prec, int budget) {
  SkewInstance out;
  out.budget = budget;
  MixedGraph& h = out.digraph;
  h = g;
  for (VertexId v : sigma.order) {
    const std::vector<VertexId> ws = ordered_edge_neighbours(g, v, prec);
    const std::size_t d = ws.size();
    std::vector<VertexId> src(d + 1), snk(d + 1);
    for (auto& x : src) x = h.add_vertex();
    for (auto& x : snk) x = h.add_vertex();
    for (ArcId a : g.out_arcs(v)) {
      const VertexId u = g.arc(a).head;
      if (!s.contains(u)) h.add_arc(src[d], u);
    }
    for (ArcId a : g.in_arcs(v)) {
      const VertexId u = g.arc(a).tail;
      if (!s.contains(u)) h.add_arc(u, snk[0]);
    }
    for (std::size_t j = 0; j < d; ++j) {
      h.add_arc(src[j], ws[j]);
      h.add_arc(ws[j], snk[j + 1]);
    }
    out.sources.insert(out.sources.end(), src.begin(), src.end());
    out.sinks.insert(out.sinks.end(), snk.begin(), snk.end());
  }
  for (VertexId v : s) h.remove_vertex(v);
  for (EdgeId e : h.edges()) {
    const auto ed = h.edge(e);
    h.remove_edge(e);
    h.add_arc(ed.u, ed.v);
    h.add_arc(ed.v, ed.u);
  }
  return out;
}

}  // namespace detail

// G_SS(G, sigma). Original non-S vertices keep their ids, so a separator of
// the result is directly a vertex set of G. The budget is left at zero.
inline SkewInstance build_gss(const MixedGraph& g, const VertexSet& s, const Numbering& sigma,
                              int budget = 0) {
  detail::check_gss_preconditions(g, s, sigma);
  return detail::build_gss(g, s, sigma, precedes_relation(g, s), budget);
}

inline SolveResult solve_fvs_umc(const FvsUmcInstance& inst,
                                 SkewMode mode = SkewMode::kImportantSeparators) {
  if (inst.budget < 1) throw InputError("solve_fvs_umc: budget must be at least 1");
  for (VertexId v : inst.s) {
    if (!inst.graph.has_vertex(v)) throw InputError("solve_fvs_umc: S is not a subset of V(G)");
  }
  if (!is_fvs(inst.graph, inst.s)) throw InputError("solve_fvs_umc: S is not a FVS");

  const PreprocessOutcome pre = preprocess_fvs_umc(inst);
  if (pre.infeasible) return SolveResult::infeasible();
  const MixedGraph& g = pre.reduced.graph;
  const VertexSet& s = pre.reduced.s;
  const PrecedenceRelation prec = precedes_relation(g, s);
  for (const Numbering& sigma : arc_compatible_numberings(g, s)) {
    const SkewInstance gss = detail::build_gss(g, s, sigma, prec, pre.reduced.budget);
    SolveResult r = solve_skew(gss, mode);
    if (r) return SolveResult::found(set_union(pre.forced, r.vertices));
  }
  return SolveResult::infeasible();
}

}  // namespace mfvs
