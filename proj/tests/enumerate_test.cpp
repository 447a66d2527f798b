#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "girthscope/enumerate.hpp"
#include "girthscope/errors.hpp"
#include "girthscope/girth.hpp"
#include "support/oracles.hpp"

namespace girthscope {
namespace {

using testing::brute_girth;
using testing::describe;

EnumConfig config(Length k, Mode mode, Connectivity conn = Connectivity::kConnected) {
  EnumConfig cfg;
  cfg.k = k;
  cfg.mode = mode;
  cfg.connectivity = conn;
  return cfg;
}

std::vector<Solution> run_baseline(const Graph& g, const EnumConfig& cfg) {
  std::vector<Solution> out;
  enumerate_baseline(g, cfg, collect_into(out));
  return out;
}

std::vector<Solution> sorted(std::vector<Solution> v) {
  std::sort(v.begin(), v.end());
  return v;
}

struct CountCase {
  const char* family;
  Length k;
  Mode mode;
  Connectivity conn;
  std::uint64_t expected;
};

// Reference counts from an exhaustive subset scan (empty set included).
const CountCase kCounts[] = {
    {"P3", kInfinite, Mode::kInduced, Connectivity::kConnected, 7},
    {"P3", Length(3), Mode::kInduced, Connectivity::kAny, 8},
    {"P3", Length(3), Mode::kEdge, Connectivity::kConnected, 4},
    {"K3", Length(3), Mode::kInduced, Connectivity::kConnected, 8},
    {"K3", Length(4), Mode::kInduced, Connectivity::kConnected, 7},
    {"K3", Length(3), Mode::kEdge, Connectivity::kConnected, 8},
    {"K3", Length(4), Mode::kEdge, Connectivity::kConnected, 7},
    {"C4", Length(4), Mode::kInduced, Connectivity::kConnected, 14},
    {"C4", Length(5), Mode::kInduced, Connectivity::kConnected, 13},
    {"C4", Length(4), Mode::kEdge, Connectivity::kConnected, 14},
    {"C4", Length(5), Mode::kEdge, Connectivity::kConnected, 13},
    {"K4", Length(3), Mode::kInduced, Connectivity::kConnected, 16},
    {"K4", Length(4), Mode::kInduced, Connectivity::kConnected, 11},
    {"K4", Length(3), Mode::kEdge, Connectivity::kConnected, 61},
    {"K4", Length(4), Mode::kEdge, Connectivity::kConnected, 38},
    {"petersen", Length(5), Mode::kInduced, Connectivity::kConnected, 569},
    {"petersen", Length(6), Mode::kInduced, Connectivity::kConnected, 351},
    {"K5", Length(4), Mode::kEdge, Connectivity::kConnected, 343},
};

TEST(Baseline, MatchesReferenceCounts) {
  for (const auto& c : kCounts) {
    const auto g = make_family(c.family);
    EXPECT_EQ(enumerate_baseline(g, config(c.k, c.mode, c.conn), [](auto, auto) { return true; }), c.expected)
        << c.family << " k=" << c.k;
  }
}

TEST(Baseline, AgreesWithBruteForceOnSmallGraphs) {
  const Length ks[] = {Length(3), Length(4), Length(5), kInfinite};
  for (const auto& g : testing::connected_graphs_up_to(4)) {
    for (auto mode : {Mode::kInduced, Mode::kEdge})
      for (auto conn : {Connectivity::kConnected, Connectivity::kAny})
        for (auto k : ks) {
          const auto cfg = config(k, mode, conn);
          EXPECT_EQ(sorted(run_baseline(g, cfg)), brute_force_enumerate(g, cfg)) << describe(g) << " k=" << k;
        }
  }
}

TEST(Baseline, EmitsEachSolutionOnce) {
  const auto g = make_complete(5);
  const auto all = run_baseline(g, config(Length(4), Mode::kEdge));
  std::set<Solution> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  for (const auto& s : all) EXPECT_TRUE(is_solution(g, config(Length(4), Mode::kEdge), s));
}

TEST(Baseline, EmptySolutionComesFirstAndCanBeDropped) {
  const auto g = make_path(3);
  auto cfg = config(kInfinite, Mode::kInduced);
  const auto with = run_baseline(g, cfg);
  ASSERT_FALSE(with.empty());
  EXPECT_TRUE(with.front().empty());
  cfg.include_empty = false;
  EXPECT_EQ(run_baseline(g, cfg).size(), with.size() - 1);
}

TEST(Baseline, LimitStopsEarly) {
  const auto g = make_petersen();
  auto cfg = config(Length(5), Mode::kInduced);
  cfg.limit = 25;
  const auto out = run_baseline(g, cfg);
  ASSERT_EQ(out.size(), 25u);
  const auto full = run_baseline(g, config(Length(5), Mode::kInduced));
  EXPECT_TRUE(std::equal(out.begin(), out.end(), full.begin()));
}

TEST(Baseline, SinkCanStopTheRun) {
  const auto g = make_complete(4);
  int seen = 0;
  const auto n = enumerate_baseline(g, config(Length(3), Mode::kEdge), [&](auto, auto) { return ++seen < 5; });
  EXPECT_EQ(n, 5u);
  EXPECT_EQ(seen, 5);
}

TEST(Baseline, OrdinalsCountFromZero) {
  std::uint64_t expected = 0;
  enumerate_baseline(make_cycle(5), config(Length(5), Mode::kInduced), [&](auto, std::uint64_t ordinal) {
    EXPECT_EQ(ordinal, expected++);
    return true;
  });
  EXPECT_EQ(expected, 1u + 5 + 5 + 5 + 5 + 1);
}

TEST(Baseline, WeightedGirthThreshold) {
  // Triangle 0-1-2 weighs 5, triangle 1-2-3 weighs 3.
  const Graph g(4, {{0, 1, 3}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}}, true);
  auto cfg = config(Length(5), Mode::kEdge, Connectivity::kAny);
  cfg.weighted = true;
  const auto all = run_baseline(g, cfg);
  EXPECT_EQ(sorted(all), brute_force_enumerate(g, cfg));
  for (const auto& s : all) {
    const auto sub = solution_graph(g, Mode::kEdge, s);
    EXPECT_GE(brute_girth(sub, true), Length(5));
  }
  // The heavy triangle qualifies, the light one does not.
  EXPECT_NE(std::find(all.begin(), all.end(), Solution{0, 1, 2}), all.end());
  EXPECT_EQ(std::find(all.begin(), all.end(), Solution{2, 3, 4}), all.end());
}

TEST(Baseline, WeightedOnUnweightedGraphIsRejected) {
  auto cfg = config(Length(3), Mode::kEdge);
  cfg.weighted = true;
  EXPECT_THROW(enumerate_baseline(make_complete(3), cfg, [](auto, auto) { return true; }), ValidationError);
}

TEST(Baseline, RejectsTinyK) {
  EXPECT_THROW(enumerate_baseline(make_complete(3), config(Length(2), Mode::kEdge), [](auto, auto) { return true; }),
               ValidationError);
}

TEST(CandidateSetNaive, AgreesWithSingleElementChecks) {
  const auto g = make_petersen();
  const auto cfg = config(Length(6), Mode::kInduced);
  BaselineState st;
  st.solution = {0, 1, 2};
  st.excluded.assign(10, 0);
  st.excluded[5] = 1;
  const auto cand = candidate_set_naive(g, st, cfg);
  for (VertexId x = 0; x < 10; ++x) {
    if (x <= 2 || x == 5) {
      EXPECT_EQ(std::count(cand.begin(), cand.end(), x), 0);
      continue;
    }
    Solution s = {0, 1, 2, x};
    std::sort(s.begin(), s.end());
    EXPECT_EQ(std::count(cand.begin(), cand.end(), x) == 1, is_solution(g, cfg, s)) << x;
  }
}

TEST(BruteForce, ParallelMatchesSerial) {
  for (const auto& g : testing::random_corpus(7, 20, 7, 12))
    for (auto mode : {Mode::kInduced, Mode::kEdge}) {
      const auto cfg = config(Length(4), mode, Connectivity::kAny);
      EXPECT_EQ(brute_force_enumerate_parallel(g, cfg), brute_force_enumerate(g, cfg)) << describe(g);
    }
}

TEST(BruteForce, BudgetIsEnforced) {
  BruteForceBudget budget;
  budget.max_edge_count = 5;
  EXPECT_THROW(brute_force_enumerate(make_complete(4), config(Length(3), Mode::kEdge), budget), BudgetError);
}

TEST(IsSolution, UsesTheIndependentGirth) {
  for (const auto& g : testing::random_corpus(11, 30, 6)) {
    std::vector<std::int32_t> all(static_cast<std::size_t>(g.n()));
    for (VertexId v = 0; v < g.n(); ++v) all[static_cast<std::size_t>(v)] = v;
    const auto cfg = config(Length(4), Mode::kInduced, Connectivity::kAny);
    EXPECT_EQ(is_solution(g, cfg, all), brute_girth(g) >= Length(4)) << describe(g);
  }
}

}  // namespace
}  // namespace girthscope
