#pragma once

#include <optional>
#include <vector>

#include "mfvs/fvs_umc.hpp"
#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"
#include "mfvs/skew_separator.hpp"
#include "mfvs/subsets.hpp"

// Exhaustive reference solvers. They use only the graph primitives and the
// definitional checkers, never the backbone or the skew construction, and are
// exponential by nature: instance size is capped.
namespace mfvs::oracles {

inline constexpr std::size_t kMaxVertices = 16;
inline constexpr int kMaxBudget = 6;

namespace detail {

inline void guard(std::size_t vertices, int budget, const char* who) {
  if (vertices > kMaxVertices) {
    throw InputError(std::string(who) + ": instance has more than 16 vertices");
  }
  if (budget > kMaxBudget) throw InputError(std::string(who) + ": budget above 6");
  if (budget < 0) throw InputError(std::string(who) + ": negative budget");
}

template <typename Accept>
SolveResult first_subset(const std::vector<VertexId>& pool, int budget, Accept&& accept) {
  SolveResult out;
  for_each_subset(pool, static_cast<std::size_t>(budget), [&](const std::vector<VertexId>& pick) {
    VertexSet x(pick.begin(), pick.end());
    if (!accept(x)) return false;
    out = SolveResult::found(std::move(x));
    return true;
  });
  return out;
}

inline std::vector<VertexId> outside(const MixedGraph& g, const VertexSet& excluded) {
  std::vector<VertexId> pool;
  for (VertexId v : g.vertices()) {
    if (!excluded.contains(v)) pool.push_back(v);
  }
  return pool;
}

}  // namespace detail

struct MinFvs {
  std::optional<VertexSet> witness;  // empty optional: minimum exceeds k_max

  bool within() const { return witness.has_value(); }
  std::size_t size() const { return witness->size(); }
};

// A minimum FVS if its size is at most k_max.
inline MinFvs brute_min_fvs(const MixedGraph& g, int k_max) {
  detail::guard(g.num_vertices(), k_max, "brute_min_fvs");
  SolveResult r = detail::first_subset(g.vertices(), k_max,
                                       [&](const VertexSet& x) { return is_fvs(g, x); });
  if (!r) return {};
  return {std::move(r.vertices)};
}

inline SolveResult brute_skew_separator(const SkewInstance& inst) {
  validate(inst);
  detail::guard(inst.digraph.num_vertices(), inst.budget, "brute_skew_separator");
  return detail::first_subset(detail::outside(inst.digraph, terminals(inst)), inst.budget,
                              [&](const VertexSet& c) { return verify_skew(inst, c); });
}

inline SolveResult brute_s_disjoint(const MixedGraph& g, const VertexSet& s) {
  if (s.empty()) throw InputError("brute_s_disjoint: S must be nonempty");
  const int k = static_cast<int>(s.size()) - 1;
  detail::guard(g.num_vertices(), k, "brute_s_disjoint");
  if (!is_fvs(g, s)) throw InputError("brute_s_disjoint: S is not a FVS");
  return detail::first_subset(detail::outside(g, s), k,
                              [&](const VertexSet& x) { return is_fvs(g, x); });
}

inline SolveResult brute_fvs_umc(const FvsUmcInstance& inst) {
  detail::guard(inst.graph.num_vertices(), inst.budget, "brute_fvs_umc");
  if (!is_fvs(inst.graph, inst.s)) throw InputError("brute_fvs_umc: S is not a FVS");
  return detail::first_subset(detail::outside(inst.graph, inst.s), inst.budget,
                              [&](const VertexSet& x) {
                                return is_fvs(inst.graph, x) && is_umc(inst.graph, inst.s, x);
                              });
}

}  // namespace mfvs::oracles
