#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfvs {

// Opaque, totally ordered identifier. Values are dense and assigned in
// insertion order by MixedGraph; they are never reused within one graph.
template <typename Tag>
struct Id {
  std::int32_t value = -1;

  constexpr Id() = default;
  constexpr explicit Id(std::int32_t v) : value(v) {}

  constexpr auto operator<=>(const Id&) const = default;

  constexpr std::size_t index() const { return static_cast<std::size_t>(value); }
};

template <typename Tag>
std::ostream& operator<<(std::ostream& os, Id<Tag> id) {
  return os << id.value;
}

using VertexId = Id<struct VertexTag>;
using EdgeId = Id<struct EdgeTag>;
using ArcId = Id<struct ArcTag>;

using VertexSet = std::set<VertexId>;
using EdgeSet = std::set<EdgeId>;

// Raised on any precondition violation of a public operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when an internal postcondition fails. Seeing one is a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Feasibility plus a witness set; shared by every solver layer.
struct SolveResult {
  bool feasible = false;
  VertexSet vertices;

  static SolveResult infeasible() { return {}; }
  static SolveResult found(VertexSet set) { return {true, std::move(set)}; }

  explicit operator bool() const { return feasible; }
};

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
  for (VertexId v : a) {
    if (!b.contains(v)) return false;
  }
  return true;
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
  for (VertexId v : a) {
    if (b.contains(v)) return true;
  }
  return false;
}

inline VertexSet set_union(VertexSet a, const VertexSet& b) {
  a.insert(b.begin(), b.end());
  return a;
}

inline VertexSet set_difference(VertexSet a, const VertexSet& b) {
  for (VertexId v : b) a.erase(v);
  return a;
}

inline std::string to_string(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : set) {
    if (!first) out += ",";
    out += std::to_string(v.value);
    first = false;
  }
  return out + "}";
}

}  // namespace mfvs
