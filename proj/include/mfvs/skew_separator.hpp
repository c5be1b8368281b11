#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"
#include "mfvs/subsets.hpp"
#include "mfvs/vertex_cut.hpp"

namespace mfvs {

// A Skew Separator instance: a digraph, equally long source and sink
// sequences, and a budget. C is a skew separator when it avoids all sources
// and sinks and no sources[i] reaches sinks[j] in digraph - C for i >= j.
struct SkewInstance {
  MixedGraph digraph;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  int budget = 0;
};

enum class SkewMode {
  kImportantSeparators,  // branching over important separators
  kBruteForce,           // subset enumeration; only sensible on small instances
};

inline void validate(const SkewInstance& inst) {
  const MixedGraph& g = inst.digraph;
  if (g.num_edges() != 0) throw InputError("skew instance: digraph has undirected edges");
  if (inst.sources.size() != inst.sinks.size()) {
    throw InputError("skew instance: source and sink sequences differ in length");
  }
  if (inst.budget < 0) throw InputError("skew instance: negative budget");
  VertexSet seen;
  for (VertexId s : inst.sources) {
    if (!g.has_vertex(s)) throw InputError("skew instance: unknown source");
    if (!seen.insert(s).second) throw InputError("skew instance: repeated terminal");
    if (g.in_degree(s) != 0) throw InputError("skew instance: source with incoming arcs");
  }
  for (VertexId t : inst.sinks) {
    if (!g.has_vertex(t)) throw InputError("skew instance: unknown sink");
    if (!seen.insert(t).second) throw InputError("skew instance: repeated terminal");
    if (g.out_degree(t) != 0) throw InputError("skew instance: sink with outgoing arcs");
  }
}

inline VertexSet terminals(const SkewInstance& inst) {
  VertexSet out(inst.sources.begin(), inst.sources.end());
  out.insert(inst.sinks.begin(), inst.sinks.end());
  return out;
}

inline bool verify_skew(const SkewInstance& inst, const VertexSet& c) {
  if (c.size() > static_cast<std::size_t>(std::max(inst.budget, 0))) return false;
  const VertexSet ends = terminals(inst);
  for (VertexId v : c) {
    if (ends.contains(v) || !inst.digraph.has_vertex(v)) return false;
  }
  const MixedGraph rest = delete_vertices(inst.digraph, c);
  for (std::size_t i = 0; i < inst.sources.size(); ++i) {
    const VertexSet reach = reachable_set(rest, inst.sources[i]);
    for (std::size_t j = 0; j <= i; ++j) {
      if (reach.contains(inst.sinks[j])) return false;
    }
  }
  return true;
}

namespace detail {

// Dense-index view of a skew instance used by the branching solver.
class SkewSearch {
 public:
  explicit SkewSearch(const SkewInstance& inst) {
    const MixedGraph& g = inst.digraph;
    ids_ = g.vertices();
    std::vector<int> index(g.vertex_bound(), -1);
    for (std::size_t i = 0; i < ids_.size(); ++i) index[ids_[i].index()] = static_cast<int>(i);
    out_.resize(ids_.size());
    for (ArcId a : g.arcs()) {
      const auto& ar = g.arc(a);
      out_[index[ar.tail.index()]].push_back(index[ar.head.index()]);
    }
    deletable_.assign(ids_.size(), 1);
    for (VertexId s : inst.sources) {
      sources_.push_back(index[s.index()]);
      deletable_[sources_.back()] = 0;
    }
    for (VertexId t : inst.sinks) {
      sinks_.push_back(index[t.index()]);
      deletable_[sinks_.back()] = 0;
    }
  }

  std::optional<VertexSet> solve(int budget) {
    std::vector<char> present(ids_.size(), 1);
    std::vector<int> chosen;
    if (!solve_level(sources_.size(), present, budget, chosen)) return std::nullopt;
    VertexSet out;
    for (int x : chosen) out.insert(ids_[x]);
    return out;
  }

 private:
  // Satisfies the constraints of sources[0..level) in the graph restricted to
  // `present`. The last source must be cut from every sink up to its position;
  // some optimal solution does so with an important separator, so it suffices
  // to branch over those and recurse on the remaining prefix.
  bool solve_level(std::size_t level, std::vector<char>& present, int budget,
                   std::vector<int>& chosen) {
    if (level == 0) return true;
    const int source = sources_[level - 1];
    const std::vector<int> sinks(sinks_.begin(), sinks_.begin() + static_cast<long>(level));
    std::vector<int> source_side{source};
    std::vector<int> separator;
    return enumerate_important(source_side, sinks, present, budget, separator,
                               [&](const std::vector<int>& sep) {
                                 std::vector<char> rest = present;
                                 for (int x : sep) rest[x] = 0;
                                 const std::size_t mark = chosen.size();
                                 chosen.insert(chosen.end(), sep.begin(), sep.end());
                                 if (solve_level(level - 1, rest, budget - static_cast<int>(sep.size()),
                                                 chosen)) {
                                   return true;
                                 }
                                 chosen.resize(mark);
                                 return false;
                               });
  }

  // Enumerates (a superset of) all important separators between `source_side`
  // and `sinks` of size at most `budget`, each extended by `prefix`. Branches
  // on a vertex v of the minimum cut furthest from the sources: either v is
  // deleted, or v joins the source side (which strictly raises the cut size).
  bool enumerate_important(std::vector<int>& source_side, const std::vector<int>& sinks,
                           std::vector<char>& present, int budget, std::vector<int>& prefix,
                           const std::function<bool(const std::vector<int>&)>& visit) {
    if (budget < 0) return false;
    VertexCutNetwork net(out_, cut_capacity(source_side), present);
    const int flow = net.max_flow(source_side, sinks, budget);
    if (flow > budget) return false;
    if (flow == 0) return visit(prefix);
    const std::vector<int> cut = net.furthest_min_cut();
    const int v = cut.front();

    present[v] = 0;
    prefix.push_back(v);
    const bool found = enumerate_important(source_side, sinks, present, budget - 1, prefix, visit);
    prefix.pop_back();
    present[v] = 1;
    if (found) return true;

    source_side.push_back(v);
    const bool found_kept = enumerate_important(source_side, sinks, present, budget, prefix, visit);
    source_side.pop_back();
    return found_kept;
  }

  std::vector<char> cut_capacity(const std::vector<int>& source_side) const {
    std::vector<char> d = deletable_;
    for (int x : source_side) d[x] = 0;
    return d;
  }

  std::vector<VertexId> ids_;
  std::vector<std::vector<int>> out_;
  std::vector<char> deletable_;
  std::vector<int> sources_;
  std::vector<int> sinks_;
};

}  // namespace detail

inline SolveResult solve_skew(const SkewInstance& inst,
                              SkewMode mode = SkewMode::kImportantSeparators) {
  validate(inst);
  if (inst.budget == 0 || inst.sources.empty()) {
    return verify_skew(inst, {}) ? SolveResult::found({}) : SolveResult::infeasible();
  }
  if (mode == SkewMode::kBruteForce) {
    const VertexSet ends = terminals(inst);
    std::vector<VertexId> candidates;
    for (VertexId v : inst.digraph.vertices()) {
      if (!ends.contains(v)) candidates.push_back(v);
    }
    SolveResult result;
    for_each_subset(candidates, static_cast<std::size_t>(inst.budget),
                    [&](const std::vector<VertexId>& pick) {
                      VertexSet c(pick.begin(), pick.end());
                      if (!verify_skew(inst, c)) return false;
                      result = SolveResult::found(std::move(c));
                      return true;
                    });
    return result;
  }
  detail::SkewSearch search(inst);
  auto found = search.solve(inst.budget);
  if (!found) return SolveResult::infeasible();
  return SolveResult::found(std::move(*found));
}

}  // namespace mfvs
