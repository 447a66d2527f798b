#include "girthscope/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "girthscope/edge_fast.hpp"
#include "girthscope/enumerate.hpp"
#include "girthscope/induced_fast.hpp"

namespace girthscope {

namespace {

std::vector<std::pair<VertexId, VertexId>> all_pairs(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.n() << " edges=[";
  for (const auto& e : g.edges()) os << (&e == g.edges().data() ? "" : " ") << e.u << "-" << e.v;
  os << "]";
  return os.str();
}

std::vector<Solution> sorted(std::vector<Solution> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

std::vector<Graph> connected_labeled_graphs(VertexId max_n) {
  std::vector<Graph> out;
  for (VertexId n = 1; n <= max_n; ++n) {
    const auto slots = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) edges.push_back({slots[i].first, slots[i].second, 1});
      Graph g(n, std::move(edges));
      if (is_connected(g)) out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> random_small_graphs(std::uint64_t seed, int count, VertexId max_n, EdgeId max_m) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) {
    const auto n = static_cast<VertexId>(1 + rng() % static_cast<std::uint64_t>(max_n));
    auto slots = all_pairs(n);
    std::shuffle(slots.begin(), slots.end(), rng);
    const auto cap = std::min<std::size_t>(slots.size(), static_cast<std::size_t>(max_m));
    const auto m = static_cast<std::size_t>(rng() % (cap + 1));
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < m; ++j) edges.push_back({slots[j].first, slots[j].second, 1});
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
  auto corpus = connected_labeled_graphs(options.exhaustive_max_n);
  auto extra = random_small_graphs(options.seed, options.random_graphs, options.random_max_n, options.random_max_m);
  corpus.insert(corpus.end(), std::make_move_iterator(extra.begin()), std::make_move_iterator(extra.end()));

  VerifyReport report;
  report.graphs = corpus.size();
  const Length ks[] = {Length(3), Length(4), Length(5), kInfinite};
  auto fail = [&](const Graph& g, const EnumConfig& cfg, const char* what) {
    std::ostringstream os;
    os << what << ": " << (cfg.mode == Mode::kInduced ? "induced" : "edge") << " "
       << (cfg.connectivity == Connectivity::kConnected ? "connected" : "any") << " k=" << cfg.k << " " << describe(g);
    report.mismatches.push_back(os.str());
  };

  for (const auto& g : corpus) {
    for (auto mode : {Mode::kInduced, Mode::kEdge})
      for (auto conn : {Connectivity::kConnected, Connectivity::kAny})
        for (auto k : ks) {
          EnumConfig cfg;
          cfg.k = k;
          cfg.mode = mode;
          cfg.connectivity = conn;
          const auto brute = brute_force_enumerate(g, cfg);
          std::vector<Solution> base;
          enumerate_baseline(g, cfg, collect_into(base));
          ++report.checks;
          if (sorted(base) != brute) fail(g, cfg, "baseline differs from brute force");
          if (conn == Connectivity::kAny) continue;
          std::vector<Solution> fast;
          if (mode == Mode::kInduced)
            enumerate_induced_fast(g, cfg, collect_into(fast));
          else
            enumerate_edges_fast(g, cfg, collect_into(fast));
          ++report.checks;
          if (sorted(fast) != brute) fail(g, cfg, "fast engine differs from brute force");
        }
  }
  return report;
}

}  // namespace girthscope
