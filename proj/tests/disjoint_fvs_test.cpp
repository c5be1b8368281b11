#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace mfvs {
namespace {

using testing::vs;

MixedGraph figure1(int m, int decorations, std::uint64_t seed = 1) {
  GeneratorParams p;
  p.family = Family::kFigure1;
  p.n = m + 2;
  p.edges = 2 * m;
  p.arcs = decorations;
  p.seed = seed;
  return generate_instance(p).graph;
}

TEST(ContractPaths, WholePathMergesIntoOneTerminal) {
  // a=0, x=1, y=2, b=3
  const MixedGraph g = construct_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {});
  const ContractedInstance c = contract_no_fvs_paths(g, {}, vs({0, 3}), EdgeSet{EdgeId(0), EdgeId(1), EdgeId(2)});
  ASSERT_EQ(c.g_star.num_vertices(), 1u);
  ASSERT_EQ(c.s_star.size(), 1u);
  const VertexId w = *c.s_star.begin();
  EXPECT_EQ(c.origin.at(w), vs({0, 1, 2, 3}));
  EXPECT_EQ(c.contracted.size(), 3u);
}

TEST(ContractPaths, NothingToContract) {
  const MixedGraph g = construct_graph(3, {{0, 1}}, {{1, 2}});
  const ContractedInstance c = contract_no_fvs_paths(g, {}, vs({0}), {});
  EXPECT_EQ(c.g_star.vertex_set(), g.vertex_set());
  EXPECT_EQ(c.g_star.edges(), g.edges());
  EXPECT_EQ(c.s_star, vs({0}));
  EXPECT_TRUE(c.contracted.empty());
}

TEST(ContractPaths, ArcsFollowTheMergedVertex) {
  // a=0, x=1, y=2; edge a-x, arc (y,x)
  const MixedGraph g = construct_graph(3, {{0, 1}}, {{2, 1}});
  const ContractedInstance c = contract_no_fvs_paths(g, {}, vs({0}), EdgeSet{EdgeId(0)});
  ASSERT_EQ(c.s_star.size(), 1u);
  const VertexId w = *c.s_star.begin();
  EXPECT_EQ(c.g_star.arc(ArcId(0)).tail, VertexId(2));
  EXPECT_EQ(c.g_star.arc(ArcId(0)).head, w);
}

TEST(ContractPaths, DeletesBranchingGuess) {
  const MixedGraph g = construct_graph(3, {{0, 1}, {1, 2}}, {});
  const ContractedInstance c = contract_no_fvs_paths(g, vs({1}), vs({0, 2}), {});
  EXPECT_EQ(c.g_star.vertex_set(), vs({0, 2}));
  EXPECT_THROW(contract_no_fvs_paths(g, vs({1}), vs({0, 2}), EdgeSet{EdgeId(0)}), InputError);
  EXPECT_THROW(contract_no_fvs_paths(g, {}, vs({0, 2}), EdgeSet{EdgeId(9)}), InputError);
}

TEST(SolveSDisjoint, SingleTerminalOnNoCycle) {
  const MixedGraph g = construct_graph(3, {{0, 1}}, {{1, 2}});
  const SolveResult r = solve_s_disjoint_fvs(g, vs({0}));
  ASSERT_TRUE(r);
  EXPECT_TRUE(r.vertices.empty());
}

TEST(SolveSDisjoint, ParallelPathGadget) {
  for (int m = 3; m <= 5; ++m) {
    const MixedGraph g = figure1(m, 0);
    EXPECT_FALSE(solve_s_disjoint_fvs(g, vs({0, 1}))) << "m=" << m;
    EXPECT_FALSE(oracles::brute_s_disjoint(g, vs({0, 1})));
  }
  // Two paths form a single cycle: any midpoint breaks it.
  const MixedGraph two = figure1(2, 0);
  const SolveResult r = solve_s_disjoint_fvs(two, vs({0, 1}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r.vertices.size(), 1u);
  EXPECT_TRUE(is_fvs(two, r.vertices));
}

TEST(SolveSDisjoint, MixedSmallCase) {
  // a=0, b=1; path a-x-b (x=2) and arc cycle a -> y -> a (y=3)
  const MixedGraph g = construct_graph(4, {{0, 2}, {2, 1}}, {{0, 3}, {3, 0}});
  const SolveResult got = solve_s_disjoint_fvs(g, vs({0, 1}));
  const SolveResult expected = oracles::brute_s_disjoint(g, vs({0, 1}));
  ASSERT_EQ(static_cast<bool>(got), static_cast<bool>(expected));
  ASSERT_TRUE(got);
  EXPECT_EQ(got.vertices, vs({3}));
}

TEST(SolveSDisjoint, RejectsBadInput) {
  const MixedGraph g = construct_graph(3, {{0, 1}, {1, 2}, {2, 0}}, {});
  EXPECT_THROW(solve_s_disjoint_fvs(g, {}), InputError);
  EXPECT_THROW(solve_s_disjoint_fvs(construct_graph(2, {{0, 1}, {0, 1}}, {}), vs({5})), InputError);
  EXPECT_THROW(solve_s_disjoint_fvs(construct_graph(3, {}, {{1, 2}, {2, 1}}), vs({0})), InputError);
}

TEST(SolveSDisjoint, MatchesBruteForce) {
  std::mt19937_64 rng(1212);
  std::uniform_int_distribution<int> n_dist(2, 10), s_dist(1, 4);
  int feasible = 0, infeasible = 0;
  for (int round = 0; round < 800; ++round) {
    const int n = n_dist(rng);
    auto [g, s] = testing::random_graph_with_fvs(rng, n, 12, 6, std::min(s_dist(rng), n));
    if (s.empty()) continue;
    const SolveResult expected = oracles::brute_s_disjoint(g, s);
    const SolveResult got = solve_s_disjoint_fvs(g, s);
    ASSERT_EQ(static_cast<bool>(got), static_cast<bool>(expected)) << "round " << round;
    if (got) {
      ++feasible;
      EXPECT_LT(got.vertices.size(), s.size());
      EXPECT_FALSE(intersects(got.vertices, s));
      EXPECT_TRUE(is_fvs(g, got.vertices));
    } else {
      ++infeasible;
    }
  }
  EXPECT_GT(feasible, 100);
  EXPECT_GT(infeasible, 100);
}

// Every oracle witness drives a guess that passes all pruning gates, and the
// structural bounds on branching vertices and witness-free paths hold.
TEST(SolveSDisjoint, OracleWitnessSurvivesPruning) {
  std::mt19937_64 rng(1313);
  std::uniform_int_distribution<int> n_dist(3, 10), s_dist(1, 4);
  int traced = 0;
  for (int round = 0; round < 800; ++round) {
    const int n = n_dist(rng);
    auto [g, s] = testing::random_graph_with_fvs(rng, n, 14, 6, std::min(s_dist(rng), n));
    if (s.empty()) continue;
    const SolveResult witness = oracles::brute_s_disjoint(g, s);
    if (!witness) continue;
    ++traced;
    const WitnessTrace t = trace_witness(g, s, witness.vertices);
    EXPECT_TRUE(t.survives()) << "S=" << to_string(s) << " witness=" << to_string(witness.vertices);
    EXPECT_LE(static_cast<int>(t.branching), 3 * t.k);
    EXPECT_LE(static_cast<int>(t.paths_avoiding_witness), 3 * t.k);
  }
  EXPECT_GT(traced, 200);
}

// Up to the oracle's size guard, with more terminals and branching vertices.
TEST(SolveSDisjoint, LargerInstancesMatchBruteForce) {
  std::mt19937_64 rng(1414);
  std::uniform_int_distribution<int> n_dist(11, 16), s_dist(3, 6);
  std::size_t max_branching = 0;
  int feasible = 0;
  for (int round = 0; round < 150; ++round) {
    const int n = n_dist(rng);
    auto [g, s] = testing::random_graph_with_fvs(rng, n, 26, 14, s_dist(rng));
    const SolveResult expected = oracles::brute_s_disjoint(g, s);
    const SolveResult got = solve_s_disjoint_fvs(g, s);
    ASSERT_EQ(static_cast<bool>(got), static_cast<bool>(expected)) << "round " << round;
    if (got) {
      ++feasible;
      EXPECT_TRUE(is_fvs(g, got.vertices));
      EXPECT_FALSE(intersects(got.vertices, s));
      EXPECT_TRUE(trace_witness(g, s, expected.vertices).survives());
    }
    max_branching = std::max(max_branching, build_backbone(g, s).br.size());
  }
  EXPECT_GT(feasible, 20);
  EXPECT_GE(max_branching, 4u);
}

TEST(TraceWitness, RejectsWitnessInsideS) {
  const MixedGraph g = construct_graph(2, {{0, 1}, {0, 1}}, {});
  EXPECT_THROW(trace_witness(g, vs({0}), vs({0})), InputError);
}

}  // namespace
}  // namespace mfvs
