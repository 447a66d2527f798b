#include <gtest/gtest.h>

#include <algorithm>

#include "girthscope/edge_fast.hpp"
#include "girthscope/errors.hpp"
#include "girthscope/girth.hpp"
#include "girthscope/variants.hpp"
#include "support/oracles.hpp"

namespace girthscope {
namespace {

using testing::describe;

std::uint64_t count_variant(const Graph& g, const EnumConfig& cfg) {
  return enumerate_variant(g, cfg, [](auto, auto) { return true; });
}

Graph weighted_triangle(Weight w) { return Graph(3, {{0, 1, w}, {1, 2, w}, {0, 2, w}}, true); }

TEST(Variants, UnitWeightsBehaveLikeUnweighted) {
  EnumConfig cfg;
  cfg.k = Length(4);
  cfg.weighted = true;
  EXPECT_EQ(count_variant(weighted_triangle(1), cfg), 7u);
}

TEST(Variants, HeavyTriangleMeetsWeightedThreshold) {
  EnumConfig cfg;
  cfg.k = Length(6);
  cfg.weighted = true;
  EXPECT_EQ(count_variant(weighted_triangle(2), cfg), 8u);
  cfg.k = Length(7);
  EXPECT_EQ(count_variant(weighted_triangle(2), cfg), 7u);
}

TEST(Variants, DisconnectedInducedOnPath) {
  EnumConfig cfg;
  cfg.k = Length(3);
  cfg.connectivity = Connectivity::kAny;
  EXPECT_EQ(count_variant(make_path(3), cfg), 8u);
}

TEST(Variants, WeightedFlagNeedsWeights) {
  EnumConfig cfg;
  cfg.weighted = true;
  EXPECT_THROW(count_variant(make_complete(3), cfg), ValidationError);
}

TEST(Variants, WeightedAllOnesEqualsUnweightedOnSmallGraphs) {
  for (const auto& g : testing::random_corpus(61, 40, 6)) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    const Graph w(g.n(), edges, true);
    for (auto mode : {Mode::kInduced, Mode::kEdge})
      for (auto k : {Length(3), Length(4), Length(5), kInfinite}) {
        EnumConfig plain;
        plain.k = k;
        plain.mode = mode;
        EnumConfig weighted = plain;
        weighted.weighted = true;
        std::vector<Solution> a, b;
        enumerate_variant(g, plain, collect_into(a));
        enumerate_variant(w, weighted, collect_into(b));
        ASSERT_EQ(a, b) << describe(g);
      }
  }
}

TEST(Variants, NonConnectedMatchesBruteForce) {
  for (const auto& g : testing::random_corpus(62, 50, 6, 7))
    for (auto mode : {Mode::kInduced, Mode::kEdge})
      for (auto k : {Length(3), Length(4), Length(5), kInfinite}) {
        EnumConfig cfg;
        cfg.k = k;
        cfg.mode = mode;
        cfg.connectivity = Connectivity::kAny;
        std::vector<Solution> got;
        enumerate_variant(g, cfg, collect_into(got));
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, brute_force_enumerate(g, cfg)) << describe(g);
      }
}

struct ExtremalCase {
  VertexId n;
  Length k;
  std::uint64_t max_edges;
  std::size_t witnesses;
};

// Labeled witness counts from an exhaustive scan over subgraphs of K_n.
const ExtremalCase kExtremal[] = {
    {4, Length(4), 4, 3},  {5, Length(4), 6, 10}, {5, Length(5), 5, 12}, {6, Length(4), 9, 10},
    {4, kInfinite, 3, 16}, {5, kInfinite, 4, 125}, {6, Length(5), 6, 420}, {6, Length(6), 6, 60},
};

TEST(Extremal, MaximumAndWitnessCounts) {
  for (const auto& c : kExtremal) {
    const auto r = densest_girth_graphs(c.n, c.k);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.max_edges, c.max_edges) << "n=" << c.n << " k=" << c.k;
    EXPECT_EQ(r.witnesses.size(), c.witnesses) << "n=" << c.n << " k=" << c.k;
  }
}

TEST(Extremal, WitnessesRevalidate) {
  for (const auto& c : kExtremal) {
    const auto r = densest_girth_graphs(c.n, c.k);
    const auto kn = make_complete(c.n);
    for (const auto& w : r.witnesses) {
      ASSERT_EQ(w.size(), r.max_edges);
      const auto sub = solution_graph(kn, Mode::kEdge, w);
      ASSERT_GE(girth_unweighted(sub), c.k);
      ASSERT_TRUE(is_connected(sub));
    }
  }
}

TEST(Extremal, PruningDoesNotChangeTheAnswer) {
  for (VertexId n = 2; n <= 6; ++n)
    for (auto k : {Length(4), Length(5), Length(6)}) {
      const auto kn = make_complete(n);
      EnumConfig cfg;
      cfg.k = k;
      cfg.mode = Mode::kEdge;
      std::vector<Solution> all;
      enumerate_edges_fast(kn, cfg, collect_into(all));
      std::size_t best = 0;
      for (const auto& s : all) best = std::max(best, s.size());
      std::vector<Solution> expected;
      for (const auto& s : all)
        if (s.size() == best) expected.push_back(s);
      std::sort(expected.begin(), expected.end());
      const auto r = densest_girth_graphs(n, k);
      EXPECT_EQ(r.max_edges, best) << "n=" << n << " k=" << k;
      EXPECT_EQ(r.witnesses, expected) << "n=" << n << " k=" << k;
      EXPECT_LE(r.explored, all.size());
    }
}

TEST(Extremal, ParallelAndArbitraryAgreeWithSerial) {
  for (VertexId n = 1; n <= 6; ++n)
    for (auto k : {Length(3), Length(4), Length(5), kInfinite}) {
      const auto serial = densest_girth_graphs(n, k);
      ExtremalOptions par;
      par.parallel = true;
      const auto parallel = densest_girth_graphs(n, k, par);
      EXPECT_EQ(parallel.max_edges, serial.max_edges);
      EXPECT_EQ(parallel.witnesses, serial.witnesses);
      if (n <= 5) {
        ExtremalOptions any;
        any.connected = false;
        const auto arbitrary = densest_girth_graphs(n, k, any);
        EXPECT_EQ(arbitrary.max_edges, serial.max_edges);
        EXPECT_EQ(arbitrary.witnesses, serial.witnesses);
      }
    }
}

TEST(Extremal, SingleVertex) {
  const auto r = densest_girth_graphs(1, Length(4));
  EXPECT_EQ(r.max_edges, 0u);
  ASSERT_EQ(r.witnesses.size(), 1u);
  EXPECT_TRUE(r.witnesses.front().empty());
}

TEST(Extremal, BudgetMarksIncomplete) {
  ExtremalOptions opt;
  opt.max_explored = 50;
  const auto r = densest_girth_graphs(6, Length(4), opt);
  EXPECT_FALSE(r.complete);
  EXPECT_EQ(r.explored, 50u);
  EXPECT_THROW(densest_girth_graphs(0, Length(4)), ValidationError);
  EXPECT_THROW(densest_girth_graphs(4, Length(2)), ValidationError);
}

TEST(Extremal, IsomorphismFilter) {
  const auto r = densest_girth_graphs(5, Length(5));
  const auto classes = distinct_up_to_isomorphism(make_complete(5), r.witnesses);
  EXPECT_EQ(classes.size(), 1u);  // C5
  const auto trees = densest_girth_graphs(5, kInfinite);
  // Paths, stars, and the spider with one long leg.
  EXPECT_EQ(distinct_up_to_isomorphism(make_complete(5), trees.witnesses).size(), 3u);
  EXPECT_THROW(distinct_up_to_isomorphism(make_complete(9), {}), ValidationError);
}

TEST(Extremal, ReportFormat) {
  const auto text = format_extremal(densest_girth_graphs(4, Length(4)));
  EXPECT_NE(text.find("max_edges=4\n"), std::string::npos);
  EXPECT_NE(text.find("complete=true\n"), std::string::npos);
  EXPECT_NE(text.find("witness 0-1 0-2 1-3 2-3\n"), std::string::npos);
}

}  // namespace
}  // namespace girthscope
