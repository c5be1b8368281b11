#pragma once

#include <deque>
#include <limits>
#include <vector>

namespace mfvs {

// Minimum vertex cuts in a digraph on dense indices 0..n-1 via vertex
// splitting: every vertex x becomes x_in -> x_out, with capacity one when x is
// deletable and unbounded otherwise; original arcs become unbounded
// x_out -> y_in arcs. Augmenting paths are found by BFS in insertion order,
// so the flow (and hence the cut reported) is deterministic.
class VertexCutNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;

  VertexCutNetwork(const std::vector<std::vector<int>>& out_neighbours,
                   const std::vector<char>& deletable, const std::vector<char>& present)
      : n_(static_cast<int>(out_neighbours.size())), adj_(2 * n_ + 2) {
    for (int x = 0; x < n_; ++x) {
      if (!present[x]) continue;
      add(in(x), out(x), deletable[x] ? 1 : kInfinite);
    }
    for (int x = 0; x < n_; ++x) {
      if (!present[x]) continue;
      for (int y : out_neighbours[x]) {
        if (present[y]) add(out(x), in(y), kInfinite);
      }
    }
  }

  // Maximum flow from `sources` to `sinks`, stopping once it exceeds `limit`.
  // Returns the flow value (at most limit + 1).
  int max_flow(const std::vector<int>& sources, const std::vector<int>& sinks, int limit) {
    for (int s : sources) add(super_source(), in(s), kInfinite);
    for (int t : sinks) add(out(t), super_sink(), kInfinite);
    int flow = 0;
    while (flow <= limit && augment()) ++flow;
    return flow;
  }

  // After max_flow: the deletable vertices on the minimum cut closest to the
  // sinks (the unique minimum cut furthest from the sources), ascending.
  std::vector<int> furthest_min_cut() const {
    // Nodes that can still reach the super sink in the residual network.
    std::vector<char> reaches(adj_.size(), 0);
    std::deque<int> queue{super_sink()};
    reaches[super_sink()] = 1;
    while (!queue.empty()) {
      const int y = queue.front();
      queue.pop_front();
      for (int id : adj_[y]) {
        // id is y -> x; its twin id ^ 1 is x -> y.
        const Arc& back = arcs_[id ^ 1];
        const int x = arcs_[id].to;
        if (back.cap > 0 && !reaches[x]) {
          reaches[x] = 1;
          queue.push_back(x);
        }
      }
    }
    std::vector<int> cut;
    for (int x = 0; x < n_; ++x) {
      if (!reaches[in(x)] && reaches[out(x)]) cut.push_back(x);
    }
    return cut;
  }

 private:
  struct Arc {
    int to;
    int cap;
  };

  int in(int x) const { return 2 * x; }
  int out(int x) const { return 2 * x + 1; }
  int super_source() const { return 2 * n_; }
  int super_sink() const { return 2 * n_ + 1; }

  void add(int from, int to, int cap) {
    adj_[from].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({to, cap});
    adj_[to].push_back(static_cast<int>(arcs_.size()));
    arcs_.push_back({from, 0});
  }

  bool augment() {
    std::vector<int> via(adj_.size(), -1);
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{super_source()};
    seen[super_source()] = 1;
    while (!queue.empty() && !seen[super_sink()]) {
      const int x = queue.front();
      queue.pop_front();
      for (int id : adj_[x]) {
        const Arc& a = arcs_[id];
        if (a.cap > 0 && !seen[a.to]) {
          seen[a.to] = 1;
          via[a.to] = id;
          queue.push_back(a.to);
        }
      }
    }
    if (!seen[super_sink()]) return false;
    // Finite capacities are all one, so one unit always fits. A path of
    // unbounded arcs keeps augmenting until the caller's limit is exceeded.
    for (int x = super_sink(); x != super_source(); x = arcs_[via[x] ^ 1].to) {
      arcs_[via[x]].cap -= 1;
      arcs_[via[x] ^ 1].cap += 1;
    }
    return true;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<Arc> arcs_;
};

}  // namespace mfvs
