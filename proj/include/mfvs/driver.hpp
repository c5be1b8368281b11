#pragma once

#include <algorithm>
#include <vector>

#include "mfvs/disjoint_fvs.hpp"
#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"
#include "mfvs/subsets.hpp"

namespace mfvs {

struct SolverOptions {
  SkewMode skew_mode = SkewMode::kImportantSeparators;
};

// Given a FVS S of G, finds a FVS of size at most |S| - 1. Tries every
// nonempty S_DEL of S (by size, then lexicographically): the part of S that
// the smaller solution drops.
inline SolveResult compress(const MixedGraph& g, const VertexSet& s, const SolverOptions& opts = {}) {
  for (VertexId v : s) {
    if (!g.has_vertex(v)) throw InputError("compress: S is not a subset of V(G)");
  }
  if (!is_fvs(g, s)) throw InputError("compress: S is not a FVS");
  if (s.empty()) return SolveResult::infeasible();

  const std::vector<VertexId> members(s.begin(), s.end());
  SolveResult result;
  for_each_subset(members, members.size(), [&](const std::vector<VertexId>& pick) {
    if (pick.empty()) return false;
    const VertexSet s_del(pick.begin(), pick.end());
    const VertexSet s_keep = set_difference(s, s_del);
    const SolveResult sub = solve_s_disjoint_fvs(delete_vertices(g, s_keep), s_del, opts.skew_mode);
    if (!sub || sub.vertices.size() + 1 > s_del.size()) return false;
    if (intersects(sub.vertices, s)) {
      throw InvariantError("compress: S-disjoint solution intersects S");
    }
    result = SolveResult::found(set_union(sub.vertices, s_keep));
    return true;
  });
  return result;
}

// Iterative compression over the vertices in ascending id order.
inline SolveResult solve_fvs(const MixedGraph& g, int k, const SolverOptions& opts = {}) {
  if (k < 0) throw InputError("solve_fvs: negative budget");
  const std::vector<VertexId> order = g.vertices();
  const std::size_t budget = static_cast<std::size_t>(k);
  const std::size_t seed = std::min(budget, order.size());

  VertexSet prefix(order.begin(), order.begin() + static_cast<long>(seed));
  VertexSet s = prefix;
  for (std::size_t i = seed; i < order.size(); ++i) {
    prefix.insert(order[i]);
    s.insert(order[i]);
    if (s.size() <= budget) continue;
    const SolveResult step = compress(induced_subgraph(g, prefix), s, opts);
    // G_i is a subgraph of G, so no FVS of size k exists for G either.
    if (!step) return SolveResult::infeasible();
    s = step.vertices;
  }
  if (!is_fvs(g, s) || s.size() > budget) {
    throw InvariantError("solve_fvs: result " + to_string(s) + " is not a FVS within budget");
  }
  return SolveResult::found(std::move(s));
}

}  // namespace mfvs
