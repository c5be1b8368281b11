#pragma once

#include <map>
#include <vector>

#include "mfvs/backbone.hpp"
#include "mfvs/fvs_umc.hpp"
#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"
#include "mfvs/subsets.hpp"

namespace mfvs {

// One guess of the two-stage enumeration: branching vertices placed in the
// solution, and backbone edges whose connection path carries an interior
// solution vertex.
struct DisjointGuess {
  VertexSet br_fvs;
  EdgeSet e_fvs;
  int k_prime = 0;
};

struct ContractedInstance {
  MixedGraph g_star;
  VertexSet s_star;
  std::map<VertexId, VertexSet> origin;  // g_star vertex -> merged originals
  EdgeSet contracted;                    // E_CONTR
};

// G - br_fvs, then repeatedly contracts an e_no_fvs edge with an endpoint in
// S*, adding the merged vertex to S*. Smallest edge id first.
inline ContractedInstance contract_no_fvs_paths(const MixedGraph& g, const VertexSet& br_fvs,
                                                const VertexSet& s, const EdgeSet& e_no_fvs) {
  for (EdgeId e : e_no_fvs) {
    if (!g.has_edge(e)) throw InputError("contract_no_fvs_paths: unknown edge");
    const auto& ed = g.edge(e);
    if (br_fvs.contains(ed.u) || br_fvs.contains(ed.v)) {
      throw InputError("contract_no_fvs_paths: edge touches a deleted branching vertex");
    }
  }
  ContractedInstance out;
  out.g_star = delete_vertices(g, br_fvs);
  out.s_star = s;
  for (VertexId v : out.g_star.vertices()) out.origin[v] = VertexSet{v};

  const std::size_t limit = out.g_star.num_vertices();
  while (true) {
    std::optional<EdgeId> next;
    for (EdgeId e : e_no_fvs) {
      if (!out.g_star.has_edge(e)) continue;
      const auto& ed = out.g_star.edge(e);
      if (ed.is_loop()) continue;
      if (out.s_star.contains(ed.u) || out.s_star.contains(ed.v)) {
        next = e;
        break;
      }
    }
    if (!next) break;
    const auto ed = out.g_star.edge(*next);
    const VertexId w = out.g_star.contract(*next);
    out.contracted.insert(*next);
    out.s_star.erase(ed.u);
    out.s_star.erase(ed.v);
    out.s_star.insert(w);
    VertexSet merged = set_union(out.origin.at(ed.u), out.origin.at(ed.v));
    out.origin.erase(ed.u);
    out.origin.erase(ed.v);
    out.origin[w] = std::move(merged);
    if (out.contracted.size() >= limit) {
      throw InvariantError("contract_no_fvs_paths: more contractions than vertices");
    }
  }
  return out;
}

namespace detail {

inline bool loop_at_terminal(const ContractedInstance& c) {
  for (EdgeId e : c.g_star.edges()) {
    const auto& ed = c.g_star.edge(e);
    if (ed.is_loop() && c.s_star.contains(ed.u)) return true;
  }
  for (ArcId a : c.g_star.arcs()) {
    const auto& ar = c.g_star.arc(a);
    if (ar.is_loop() && c.s_star.contains(ar.tail)) return true;
  }
  return false;
}

inline MixedGraph without_edges(MixedGraph g, const EdgeSet& edges) {
  for (EdgeId e : edges) g.remove_edge(e);
  return g;
}

inline EdgeSet no_fvs_edges(const Backbone& b, const MixedGraph& g_prime, const EdgeSet& e_fvs) {
  EdgeSet out;
  for (EdgeId e : g_prime.edges()) {
    if (e_fvs.contains(e)) continue;
    const EdgeSet& path = b.path_map.at(e);
    out.insert(path.begin(), path.end());
  }
  return out;
}

// FVS/UMC on the contracted instance. A zero budget only admits the empty
// set, which is checked directly.
inline SolveResult solve_contracted(const ContractedInstance& c, int k_prime, SkewMode mode) {
  if (k_prime == 0) {
    const bool ok = is_fvs(c.g_star, {}) && is_umc(c.g_star, c.s_star, {});
    return ok ? SolveResult::found({}) : SolveResult::infeasible();
  }
  return solve_fvs_umc(FvsUmcInstance{c.g_star, c.s_star, k_prime}, mode);
}

inline void require_disjoint_instance(const MixedGraph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("S-disjoint FVS: S must be nonempty");
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw InputError("S-disjoint FVS: S is not a subset of V(G)");
  }
  if (!is_fvs(g, s)) throw InputError("S-disjoint FVS: S is not a FVS");
}

}  // namespace detail

// Finds S' with |S'| < |S|, S' disjoint from S, and G - S' acyclic.
inline SolveResult solve_s_disjoint_fvs(const MixedGraph& g, const VertexSet& s,
                                        SkewMode mode = SkewMode::kImportantSeparators) {
  detail::require_disjoint_instance(g, s);
  const int k = static_cast<int>(s.size()) - 1;
  const Backbone b = build_backbone(g, s);
  if (static_cast<int>(b.br.size()) > 3 * k) return SolveResult::infeasible();

  const std::vector<VertexId> branching(b.br.begin(), b.br.end());
  SolveResult result;
  for_each_subset(branching, static_cast<std::size_t>(k), [&](const std::vector<VertexId>& pick) {
    const VertexSet br_fvs(pick.begin(), pick.end());
    const int k_prime = k - static_cast<int>(br_fvs.size());
    const MixedGraph g_prime = delete_vertices(b.bb, br_fvs);
    if (static_cast<int>(g_prime.num_edges()) > 3 * k + k_prime) return false;

    return for_each_subset(g_prime.edges(), static_cast<std::size_t>(k_prime),
                           [&](const std::vector<EdgeId>& e_pick) {
                             const EdgeSet e_fvs(e_pick.begin(), e_pick.end());
                             if (has_cycle(detail::without_edges(g_prime, e_fvs))) return false;
                             const EdgeSet e_no_fvs = detail::no_fvs_edges(b, g_prime, e_fvs);
                             const ContractedInstance c =
                                 contract_no_fvs_paths(g, br_fvs, s, e_no_fvs);
                             if (detail::loop_at_terminal(c)) return false;
                             SolveResult sub = detail::solve_contracted(c, k_prime, mode);
                             if (!sub) return false;
                             result = SolveResult::found(set_union(sub.vertices, br_fvs));
                             return true;
                           });
  });
  return result;
}

// Replays the guess that a known solution S' induces through every pruning
// gate of the enumeration; all gates must pass for the search to be complete.
struct WitnessTrace {
  int k = 0;
  std::size_t branching = 0;               // |Br|
  std::size_t paths_avoiding_witness = 0;  // connection paths with no S' vertex
  DisjointGuess guess;
  bool branching_gate = false;  // |Br| <= 3k
  bool edge_count_gate = false;  // |E(G')| <= 3k + k'
  bool edge_budget = false;      // |E_FVS| <= k'
  bool cycle_gate = false;       // G' - E_FVS acyclic
  bool loop_gate = false;        // no loop at an S* vertex after contraction
  bool subproblem = false;       // S' - Br_FVS is a FVS and UMC for (G*, S*)

  bool survives() const {
    return branching_gate && edge_count_gate && edge_budget && cycle_gate && loop_gate && subproblem;
  }
};

inline WitnessTrace trace_witness(const MixedGraph& g, const VertexSet& s, const VertexSet& witness) {
  detail::require_disjoint_instance(g, s);
  if (intersects(witness, s)) throw InputError("trace_witness: witness intersects S");
  WitnessTrace t;
  t.k = static_cast<int>(s.size()) - 1;
  const Backbone b = build_backbone(g, s);
  t.branching = b.br.size();
  for (const auto& [e, path] : b.path_map) {
    if (!intersects(path_vertices(g, path), witness)) ++t.paths_avoiding_witness;
  }
  t.branching_gate = static_cast<int>(b.br.size()) <= 3 * t.k;

  for (VertexId v : b.br) {
    if (witness.contains(v)) t.guess.br_fvs.insert(v);
  }
  t.guess.k_prime = t.k - static_cast<int>(t.guess.br_fvs.size());
  const MixedGraph g_prime = delete_vertices(b.bb, t.guess.br_fvs);
  t.edge_count_gate = static_cast<int>(g_prime.num_edges()) <= 3 * t.k + t.guess.k_prime;
  for (EdgeId e : g_prime.edges()) {
    if (intersects(path_vertices(g, b.path_map.at(e)), witness)) t.guess.e_fvs.insert(e);
  }
  t.edge_budget = static_cast<int>(t.guess.e_fvs.size()) <= t.guess.k_prime;
  t.cycle_gate = !has_cycle(detail::without_edges(g_prime, t.guess.e_fvs));
  if (!t.cycle_gate) return t;

  const ContractedInstance c =
      contract_no_fvs_paths(g, t.guess.br_fvs, s, detail::no_fvs_edges(b, g_prime, t.guess.e_fvs));
  t.loop_gate = !detail::loop_at_terminal(c);
  const VertexSet rest = set_difference(witness, t.guess.br_fvs);
  t.subproblem = is_subset(rest, c.g_star.vertex_set()) && !intersects(rest, c.s_star) &&
                 static_cast<int>(rest.size()) <= t.guess.k_prime && is_fvs(c.g_star, rest) &&
                 is_umc(c.g_star, c.s_star, rest);
  return t;
}

}  // namespace mfvs
