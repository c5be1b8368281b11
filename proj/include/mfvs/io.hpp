#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mfvs/graph_algorithms.hpp"
#include "mfvs/ids.hpp"
#include "mfvs/mixed_graph.hpp"

namespace mfvs {

// Text instance format, one record per line:
//   c <comment>
//   p mfvs <n> <num_edges> <num_arcs>   (first non-comment line, exactly once)
//   e <u> <v>                           undirected edge, u = v is a loop
//   a <u> <v>                           arc u -> v
//   s <u>                               u belongs to the given set S
// Vertices are 1-based in the file and map to VertexId(u - 1).
struct InstanceFile {
  MixedGraph graph;
  std::optional<VertexSet> s;
  std::vector<std::string> comments;
};

class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

inline InstanceFile parse_instance(const std::string& text) {
  InstanceFile out;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int header_line = 0;
  long n = -1, want_edges = 0, want_arcs = 0;

  auto read_vertex = [&](std::istringstream& fields) {
    long u = 0;
    if (!(fields >> u)) throw ParseError(line_no, "expected a vertex index");
    if (u < 1 || u > n) {
      throw ParseError(line_no, "vertex " + std::to_string(u) + " out of range 1.." + std::to_string(n));
    }
    return VertexId(static_cast<std::int32_t>(u - 1));
  };
  auto expect_end = [&](std::istringstream& fields) {
    std::string extra;
    if (fields >> extra) throw ParseError(line_no, "unexpected token '" + extra + "'");
  };

  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream fields(raw);
    std::string tag;
    if (!(fields >> tag)) continue;
    if (tag == "c") {
      const auto pos = raw.find('c');
      std::string rest = raw.substr(pos + 1);
      if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
      out.comments.push_back(rest);
      continue;
    }
    if (tag == "p") {
      if (header_line != 0) throw ParseError(line_no, "duplicate header");
      std::string format;
      if (!(fields >> format) || format != "mfvs") throw ParseError(line_no, "expected 'p mfvs'");
      if (!(fields >> n >> want_edges >> want_arcs) || n < 0 || want_edges < 0 || want_arcs < 0) {
        throw ParseError(line_no, "malformed header");
      }
      expect_end(fields);
      header_line = line_no;
      for (long i = 0; i < n; ++i) out.graph.add_vertex();
      continue;
    }
    if (header_line == 0) throw ParseError(line_no, "record before 'p mfvs' header");
    if (tag == "e" || tag == "a") {
      const VertexId u = read_vertex(fields);
      const VertexId v = read_vertex(fields);
      expect_end(fields);
      if (tag == "e") {
        out.graph.add_edge(u, v);
      } else {
        out.graph.add_arc(u, v);
      }
    } else if (tag == "s") {
      const VertexId u = read_vertex(fields);
      expect_end(fields);
      if (!out.s) out.s.emplace();
      out.s->insert(u);
    } else {
      throw ParseError(line_no, "unknown record type '" + tag + "'");
    }
  }
  if (header_line == 0) throw ParseError(line_no, "missing 'p mfvs' header");
  if (static_cast<long>(out.graph.num_edges()) != want_edges) {
    throw ParseError(header_line, "header declares " + std::to_string(want_edges) + " edges, found " +
                                      std::to_string(out.graph.num_edges()));
  }
  if (static_cast<long>(out.graph.num_arcs()) != want_arcs) {
    throw ParseError(header_line, "header declares " + std::to_string(want_arcs) + " arcs, found " +
                                      std::to_string(out.graph.num_arcs()));
  }
  return out;
}

// Writes vertices relabelled 1..n in ascending id order; edges and arcs in id
// order.
inline std::string serialize_instance(const InstanceFile& file) {
  const MixedGraph& g = file.graph;
  std::map<VertexId, int> label;
  for (VertexId v : g.vertices()) label.emplace(v, static_cast<int>(label.size()) + 1);
  std::ostringstream out;
  for (const auto& c : file.comments) out << "c " << c << "\n";
  out << "p mfvs " << g.num_vertices() << " " << g.num_edges() << " " << g.num_arcs() << "\n";
  for (EdgeId e : g.edges()) out << "e " << label.at(g.edge(e).u) << " " << label.at(g.edge(e).v) << "\n";
  for (ArcId a : g.arcs()) out << "a " << label.at(g.arc(a).tail) << " " << label.at(g.arc(a).head) << "\n";
  if (file.s) {
    for (VertexId v : *file.s) out << "s " << label.at(v) << "\n";
  }
  return out.str();
}

enum class Family { kRandom, kPlanted, kFigure1 };

struct GeneratorParams {
  Family family = Family::kRandom;
  int n = 0;
  int edges = 0;
  int arcs = 0;
  int planted_k = 0;  // planted: size of the planted FVS
  std::uint64_t seed = 0;
};

namespace detail {

// Portable draws: mt19937_64 output is fixed by the standard, the library
// distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  int below(int bound) { return static_cast<int>(rng_() % static_cast<std::uint64_t>(bound)); }

 private:
  std::mt19937_64 rng_;
};

inline InstanceFile generate_random(const GeneratorParams& p) {
  if (p.n < 1 && p.edges + p.arcs > 0) throw InputError("generate: edges or arcs requested on an empty graph");
  InstanceFile out;
  out.graph = construct_graph(p.n, {}, {});
  Draw draw(p.seed);
  for (int i = 0; i < p.edges; ++i) out.graph.add_edge(VertexId(draw.below(p.n)), VertexId(draw.below(p.n)));
  for (int i = 0; i < p.arcs; ++i) out.graph.add_arc(VertexId(draw.below(p.n)), VertexId(draw.below(p.n)));
  return out;
}

// Every cycle is routed through the planted set P: among V - P the edges form
// a forest and arcs run from lower- to higher-ranked trees.
inline InstanceFile generate_planted(const GeneratorParams& p) {
  if (p.planted_k < 0 || p.planted_k > p.n) throw InputError("generate: planted-k must lie in 0..n");
  const int free = p.n - p.planted_k;
  if (p.planted_k == 0 && p.edges > std::max(free - 1, 0)) {
    throw InputError("generate: more edges than a forest can hold without a planted set");
  }
  if (p.n == 0 && p.arcs > 0) throw InputError("generate: arcs requested on an empty graph");
  InstanceFile out;
  out.graph = construct_graph(p.n, {}, {});
  Draw draw(p.seed);
  // Planted vertices are a random sample; the rest are shuffled.
  std::vector<int> perm(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) perm[i] = i;
  for (int i = p.n - 1; i > 0; --i) std::swap(perm[i], perm[draw.below(i + 1)]);
  VertexSet planted;
  for (int i = 0; i < p.planted_k; ++i) planted.insert(VertexId(perm[i]));
  std::vector<VertexId> rest;
  for (int i = p.planted_k; i < p.n; ++i) rest.push_back(VertexId(perm[i]));
  auto any_planted = [&] { return VertexId(perm[draw.below(p.planted_k)]); };

  ::mfvs::detail::DisjointSets trees(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.edges; ++i) {
    VertexId u(draw.below(p.n));
    VertexId v(draw.below(p.n));
    if (!planted.contains(u) && !planted.contains(v) && !trees.unite(u.index(), v.index())) {
      if (p.planted_k == 0) {
        // Redraw inside the forest: pick a pair from different trees.
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
          u = rest[draw.below(free)];
          v = rest[draw.below(free)];
          placed = trees.unite(u.index(), v.index());
        }
        if (!placed) throw InputError("generate: could not place an acyclic edge");
      } else {
        v = any_planted();
      }
    }
    out.graph.add_edge(u, v);
  }
  std::vector<int> rank(static_cast<std::size_t>(p.n), 0);
  for (int i = 0; i < p.n; ++i) rank[i] = draw.below(1 << 20);
  auto tree_rank = [&](VertexId v) {
    const std::size_t root = trees.find(v.index());
    return std::pair{rank[root], root};
  };
  for (int i = 0; i < p.arcs; ++i) {
    VertexId u(draw.below(p.n));
    VertexId v(draw.below(p.n));
    if (!planted.contains(u) && !planted.contains(v)) {
      if (trees.find(u.index()) == trees.find(v.index())) {
        if (p.planted_k > 0) {
          v = any_planted();
        } else {
          for (int attempt = 0; attempt < 64 && trees.find(u.index()) == trees.find(v.index()); ++attempt) {
            u = rest[draw.below(free)];
            v = rest[draw.below(free)];
          }
          if (trees.find(u.index()) == trees.find(v.index())) {
            throw InputError("generate: could not place an acyclic arc");
          }
        }
      }
      if (!planted.contains(v) && tree_rank(v) < tree_rank(u)) {
        std::swap(u, v);
      }
    }
    out.graph.add_arc(u, v);
  }
  out.s = planted;
  out.comments.push_back("planted fvs of size " + std::to_string(p.planted_k));
  return out;
}

// Two terminals u, v joined by m = n - 2 undirected paths u - x_i - v, with
// optional decoration arcs x_i -> x_{i+1} that defeat degree-two reductions.
inline InstanceFile generate_figure1(const GeneratorParams& p) {
  if (p.n < 2) throw InputError("generate: figure1 needs n >= 2");
  const int m = p.n - 2;
  if (p.edges != 2 * m) throw InputError("generate: figure1 with n = " + std::to_string(p.n) +
                                         " has exactly " + std::to_string(2 * m) + " edges");
  if (p.arcs < 0 || p.arcs > std::max(m - 1, 0)) {
    throw InputError("generate: figure1 takes at most n - 3 decoration arcs");
  }
  InstanceFile out;
  out.graph = construct_graph(p.n, {}, {});
  const VertexId u(0), v(1);
  for (int i = 0; i < m; ++i) {
    out.graph.add_edge(u, VertexId(2 + i));
    out.graph.add_edge(VertexId(2 + i), v);
  }
  for (int i = 0; i < p.arcs; ++i) out.graph.add_arc(VertexId(2 + i), VertexId(3 + i));
  out.s = VertexSet{u, v};
  out.comments.push_back("figure1 gadget with " + std::to_string(m) + " paths");
  return out;
}

}  // namespace detail

inline InstanceFile generate_instance(const GeneratorParams& p) {
  if (p.n < 0 || p.edges < 0 || p.arcs < 0) throw InputError("generate: negative parameter");
  switch (p.family) {
    case Family::kRandom:
      return detail::generate_random(p);
    case Family::kPlanted:
      return detail::generate_planted(p);
    case Family::kFigure1:
      return detail::generate_figure1(p);
  }
  throw InputError("generate: unknown family");
}

inline std::optional<Family> parse_family(const std::string& name) {
  if (name == "random") return Family::kRandom;
  if (name == "planted") return Family::kPlanted;
  if (name == "figure1") return Family::kFigure1;
  return std::nullopt;
}

}  // namespace mfvs
