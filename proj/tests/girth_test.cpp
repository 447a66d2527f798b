#include <gtest/gtest.h>

#include <random>

#include "girthscope/errors.hpp"
#include "girthscope/girth.hpp"
#include "support/oracles.hpp"

namespace girthscope {
namespace {

using testing::describe;

TEST(Girth, Families) {
  EXPECT_EQ(girth(make_complete(3)), Length(3));
  EXPECT_EQ(girth(make_complete(7)), Length(3));
  EXPECT_EQ(girth(make_cycle(4)), Length(4));
  EXPECT_EQ(girth(make_cycle(9)), Length(9));
  EXPECT_EQ(girth(make_petersen()), Length(5));
  EXPECT_EQ(girth(make_path(6)), kInfinite);
  EXPECT_EQ(girth(Graph(0, {})), kInfinite);
}

TEST(Girth, MatchesCycleSearchOnEverySmallGraph) {
  for (VertexId n = 1; n <= 5; ++n)
    for (const auto& g : testing::all_labeled_graphs(n)) ASSERT_EQ(girth_unweighted(g), testing::brute_girth(g)) << describe(g);
}

TEST(Girth, MatchesCycleSearchOnRandomGraphs) {
  for (const auto& g : testing::random_corpus(12345, 200, 10)) ASSERT_EQ(girth_unweighted(g), testing::brute_girth(g)) << describe(g);
}

TEST(Girth, WeightedMatchesCycleSearch) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<Weight> weight(1, 9);
  for (const auto& base : testing::random_corpus(77, 150, 8)) {
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (auto& e : edges) e.weight = weight(rng);
    const Graph g(base.n(), edges, true);
    ASSERT_EQ(girth_weighted(g), testing::brute_girth(g, true)) << describe(g);
    ASSERT_EQ(girth(g), girth_weighted(g));
  }
}

TEST(Girth, WeightedWithUnitWeightsEqualsUnweighted) {
  for (const auto& g : testing::random_corpus(5, 100, 9)) ASSERT_EQ(girth_weighted(g), girth_unweighted(g)) << describe(g);
}

TEST(PairDistance, MatchesFloydWarshallOracle) {
  std::mt19937_64 rng(21);
  for (const auto& g : testing::random_corpus(6, 60, 9)) {
    if (g.n() < 2) continue;
    std::bernoulli_distribution coin(0.5);
    std::vector<VertexId> s;
    VertexSet set(g.n());
    for (VertexId v = 0; v < g.n(); ++v)
      if (coin(rng)) {
        s.push_back(v);
        set.insert(v);
      }
    for (VertexId u = 0; u < g.n(); ++u)
      for (VertexId w = 0; w < g.n(); ++w)
        if (u != w) ASSERT_EQ(pair_distance(g, set, u, w), testing::oracle_pair_distance(g, s, u, w)) << describe(g);
  }
  EXPECT_THROW(pair_distance(make_path(3), VertexSet(3), 1, 1), ContractError);
}

TEST(SecondDistance, MatchesEdgeDeletionOracleAndIgnoresTieBreak) {
  std::mt19937_64 rng(42);
  std::uint64_t ties = 0;
  auto graphs = testing::random_corpus(9, 80, 9);
  graphs.push_back(make_petersen());
  graphs.push_back(make_cycle(6));
  for (const auto& g : graphs) {
    std::bernoulli_distribution coin(0.6);
    std::vector<VertexId> s;
    VertexSet set(g.n());
    for (VertexId v = 0; v < g.n(); ++v)
      if (coin(rng)) {
        s.push_back(v);
        set.insert(v);
      }
    for (VertexId u = 0; u < g.n(); ++u)
      for (VertexId w = 0; w < g.n(); ++w) {
        if (u == w || set.contains(u) || set.contains(w)) continue;
        const auto asc = second_distance(g, set, u, w, TieBreak::kAscending);
        ASSERT_EQ(asc, testing::oracle_second_distance(g, s, u, w)) << describe(g) << " u=" << u << " w=" << w;
        ASSERT_EQ(asc, second_distance(g, set, u, w, TieBreak::kDescending));
        if (asc == pair_distance(g, set, u, w) && asc.is_finite()) ++ties;
      }
  }
  // Some pairs have two equally short first edges.
  EXPECT_GT(ties, 0u);
}

TEST(SecondDistance, SimpleCases) {
  // On C6 with S = the far side, the two routes between adjacent u and w are 1 and 5.
  const auto c6 = make_cycle(6);
  const VertexSet s(6, {2, 3, 4, 5});
  EXPECT_EQ(second_distance(c6, s, 0, 1), Length(5));
  EXPECT_EQ(second_distance(c6, VertexSet(6), 0, 1), kInfinite);
  EXPECT_THROW(second_distance(c6, s, 2, 1), ContractError);
}

}  // namespace
}  // namespace girthscope
