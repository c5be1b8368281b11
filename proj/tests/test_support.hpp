#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "mfvs/mfvs.hpp"

namespace mfvs::testing {

using Pairs = std::vector<std::pair<int, int>>;

inline VertexSet vs(std::initializer_list<int> ids) {
  VertexSet out;
  for (int i : ids) out.insert(VertexId(i));
  return out;
}

// Walk-level cycle search straight from the definition: vertices v0..v_{l-1}
// distinct, v_l = v0, elements pairwise distinct, edges either way, arcs
// forward. Exponential; only for tiny graphs.
inline bool brute_has_cycle(const MixedGraph& g) {
  struct Step {
    VertexId to;
    int element;  // edges >= 0, arcs encoded as -(id + 1)
  };
  auto steps = [&](VertexId x) {
    std::vector<Step> out;
    for (EdgeId e : g.incident_edges(x)) out.push_back({g.edge(e).other(x), e.value});
    for (ArcId a : g.out_arcs(x)) out.push_back({g.arc(a).head, -(a.value + 1)});
    return out;
  };
  for (VertexId start : g.vertices()) {
    std::set<VertexId> on_walk{start};
    std::set<int> used;
    std::function<bool(VertexId)> extend = [&](VertexId x) {
      for (const Step& s : steps(x)) {
        if (used.contains(s.element)) continue;
        if (s.to == start) return true;
        if (on_walk.contains(s.to)) continue;
        on_walk.insert(s.to);
        used.insert(s.element);
        if (extend(s.to)) return true;
        on_walk.erase(s.to);
        used.erase(s.element);
      }
      return false;
    };
    if (extend(start)) return true;
  }
  return false;
}

// All undirected paths and cycles of G[E] whose ends lie in `anchors` and
// whose interior avoids `anchors`, as edge-id sets.
inline std::set<EdgeSet> brute_connection_paths(const MixedGraph& g, const VertexSet& anchors) {
  std::set<EdgeSet> out;
  for (VertexId start : anchors) {
    if (!g.has_vertex(start)) continue;
    std::set<VertexId> on_path{start};
    EdgeSet used;
    std::function<void(VertexId)> extend = [&](VertexId x) {
      for (EdgeId e : g.incident_edges(x)) {
        if (used.contains(e)) continue;
        const VertexId y = g.edge(e).other(x);
        if (anchors.contains(y)) {
          if (y == start || !on_path.contains(y)) {
            EdgeSet path = used;
            path.insert(e);
            out.insert(path);
          }
          continue;
        }
        if (on_path.contains(y)) continue;
        on_path.insert(y);
        used.insert(e);
        extend(y);
        on_path.erase(y);
        used.erase(e);
      }
    };
    extend(start);
  }
  return out;
}

inline MixedGraph random_graph(std::mt19937_64& rng, int n, int edges, int arcs) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  MixedGraph g = construct_graph(n, {}, {});
  for (int i = 0; i < edges; ++i) g.add_edge(VertexId(pick(rng)), VertexId(pick(rng)));
  for (int i = 0; i < arcs; ++i) g.add_arc(VertexId(pick(rng)), VertexId(pick(rng)));
  return g;
}

// Random graph with a planted FVS S of size s_size: vertices outside S
// are wired acyclically via the planted generator.
struct GraphWithFvs {
  MixedGraph graph;
  VertexSet s;
};

inline GraphWithFvs random_graph_with_fvs(std::mt19937_64& rng, int n, int max_edges, int max_arcs,
                                          int s_size) {
  std::uniform_int_distribution<int> e(0, max_edges), a(0, max_arcs);
  GeneratorParams p;
  p.family = Family::kPlanted;
  p.n = n;
  p.edges = e(rng);
  p.arcs = a(rng);
  p.planted_k = s_size;
  p.seed = rng();
  InstanceFile f = generate_instance(p);
  return {std::move(f.graph), *f.s};
}

// Greedy FVS in a random vertex order, trimmed to a minimal one.
inline VertexSet greedy_fvs(const MixedGraph& g, std::mt19937_64& rng) {
  std::vector<VertexId> order = g.vertices();
  std::shuffle(order.begin(), order.end(), rng);
  VertexSet s;
  for (VertexId v : order) {
    if (is_fvs(g, s)) break;
    s.insert(v);
  }
  for (VertexId v : VertexSet(s)) {
    VertexSet smaller = s;
    smaller.erase(v);
    if (is_fvs(g, smaller)) s = smaller;
  }
  return s;
}

// Random skew instance: a random digraph on `inner` vertices plus l sources
// (out-arcs only) and l sinks (in-arcs only); rarely a direct source-sink arc.
inline SkewInstance random_skew_instance(std::mt19937_64& rng, int inner, int l, int arcs, int budget) {
  SkewInstance inst;
  MixedGraph& g = inst.digraph;
  std::vector<VertexId> core;
  for (int i = 0; i < inner; ++i) core.push_back(g.add_vertex());
  for (int i = 0; i < l; ++i) inst.sources.push_back(g.add_vertex());
  for (int i = 0; i < l; ++i) inst.sinks.push_back(g.add_vertex());
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> pick_core(0, std::max(inner - 1, 0));
  std::uniform_int_distribution<int> pick_end(0, std::max(l - 1, 0));
  for (int i = 0; i < arcs; ++i) {
    const int k = kind(rng);
    if (l > 0 && k == 9 && i % 4 == 0) {
      g.add_arc(inst.sources[pick_end(rng)], inst.sinks[pick_end(rng)]);
    } else if (l > 0 && k < 3) {
      g.add_arc(inst.sources[pick_end(rng)], inner > 0 ? core[pick_core(rng)] : inst.sinks[pick_end(rng)]);
    } else if (l > 0 && k < 6) {
      g.add_arc(inner > 0 ? core[pick_core(rng)] : inst.sources[pick_end(rng)], inst.sinks[pick_end(rng)]);
    } else if (inner > 0) {
      g.add_arc(core[pick_core(rng)], core[pick_core(rng)]);
    }
  }
  inst.budget = budget;
  return inst;
}

}  // namespace mfvs::testing
