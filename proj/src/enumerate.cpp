#include "girthscope/enumerate.hpp"

#include <algorithm>

#include "girthscope/girth.hpp"

namespace girthscope {

void EnumConfig::validate(const Graph& g) const {
  if (k.is_finite() && k.value() < 3) throw ValidationError("girth threshold k must be at least 3 or inf, got " + k.to_string());
  if (weighted && !g.weighted()) throw ValidationError("weighted girth requested on an unweighted graph");
}

SolutionSink collect_into(std::vector<Solution>& out) {
  return [&out](std::span<const std::int32_t> s, std::uint64_t) {
    out.emplace_back(s.begin(), s.end());
    return true;
  };
}

Graph solution_graph(const Graph& g, Mode mode, std::span<const std::int32_t> solution) {
  if (mode == Mode::kInduced) return induced_subgraph(g, VertexSet(static_cast<std::size_t>(g.n()), solution));
  return edge_subgraph(g, EdgeSet(static_cast<std::size_t>(g.m()), solution));
}

bool is_solution(const Graph& g, const EnumConfig& cfg, std::span<const std::int32_t> solution) {
  const Graph sub = solution_graph(g, cfg.mode, solution);
  if (cfg.connectivity == Connectivity::kConnected && !is_connected(sub)) return false;
  return (cfg.weighted ? girth_weighted(sub) : girth_unweighted(sub)) >= cfg.k;
}

std::vector<std::int32_t> candidate_set_naive(const Graph& g, const BaselineState& state, const EnumConfig& cfg) {
  const std::int32_t universe = cfg.mode == Mode::kInduced ? g.n() : g.m();
  if (state.excluded.size() != static_cast<std::size_t>(universe)) throw ContractError("exclusion mask does not match the graph");
  std::vector<std::uint8_t> in_solution(static_cast<std::size_t>(universe), 0);
  for (auto x : state.solution) in_solution[static_cast<std::size_t>(x)] = 1;

  std::vector<std::int32_t> trial(state.solution);
  trial.push_back(0);
  std::vector<std::int32_t> out;
  for (std::int32_t x = 0; x < universe; ++x) {
    if (in_solution[static_cast<std::size_t>(x)] || state.excluded[static_cast<std::size_t>(x)]) continue;
    trial.back() = x;
    if (is_solution(g, cfg, trial)) out.push_back(x);
  }
  return out;
}

namespace {

class BaselineRun {
 public:
  BaselineRun(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EnumStats* stats)
      : g_(g), cfg_(cfg), sink_(sink), stats_(stats) {
    state_.excluded.assign(static_cast<std::size_t>(cfg.mode == Mode::kInduced ? g.n() : g.m()), 0);
  }

  std::uint64_t run() {
    recurse(0);
    return count_;
  }

 private:
  bool emit() {
    if (cfg_.limit && count_ >= *cfg_.limit) return false;
    sorted_ = state_.solution;
    std::sort(sorted_.begin(), sorted_.end());
    const bool more = sink_(sorted_, count_);
    ++count_;
    return more && !(cfg_.limit && count_ >= *cfg_.limit);
  }

  bool recurse(std::uint64_t depth) {
    if (stats_) {
      ++stats_->iterations;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    if ((depth > 0 || cfg_.include_empty) && !emit()) return false;
    const auto candidates = candidate_set_naive(g_, state_, cfg_);
    std::size_t done = 0;
    bool more = true;
    for (auto x : candidates) {
      state_.solution.push_back(x);
      more = recurse(depth + 1);
      state_.solution.pop_back();
      if (!more) break;
      state_.excluded[static_cast<std::size_t>(x)] = 1;
      ++done;
    }
    for (std::size_t i = 0; i < done; ++i) state_.excluded[static_cast<std::size_t>(candidates[i])] = 0;
    return more;
  }

  const Graph& g_;
  const EnumConfig& cfg_;
  const SolutionSink& sink_;
  EnumStats* stats_;
  BaselineState state_;
  std::vector<std::int32_t> sorted_;
  std::uint64_t count_ = 0;
};

int subset_universe(const Graph& g, const EnumConfig& cfg, BruteForceBudget budget) {
  const int universe = cfg.mode == Mode::kInduced ? g.n() : g.m();
  const int cap = cfg.mode == Mode::kInduced ? budget.max_induced_vertices : budget.max_edge_count;
  if (universe > cap || universe > 62)
    throw BudgetError("brute force over 2^" + std::to_string(universe) + " subsets exceeds the budget of 2^" + std::to_string(cap));
  return universe;
}

Solution decode(std::uint64_t mask) {
  Solution s;
  for (std::int32_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) s.push_back(i);
  return s;
}

std::vector<Solution> finish(std::vector<Solution> found, const EnumConfig& cfg) {
  std::sort(found.begin(), found.end());
  if (!cfg.include_empty && !found.empty() && found.front().empty()) found.erase(found.begin());
  if (cfg.limit && found.size() > *cfg.limit) found.resize(static_cast<std::size_t>(*cfg.limit));
  return found;
}

}  // namespace

std::uint64_t enumerate_baseline(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EnumStats* stats) {
  cfg.validate(g);
  if (cfg.limit && *cfg.limit == 0) return 0;
  return BaselineRun(g, cfg, sink, stats).run();
}

std::vector<Solution> brute_force_enumerate(const Graph& g, const EnumConfig& cfg, BruteForceBudget budget) {
  cfg.validate(g);
  const int universe = subset_universe(g, cfg, budget);
  std::vector<Solution> found;
  const std::uint64_t total = std::uint64_t{1} << universe;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Solution s = decode(mask);
    if (is_solution(g, cfg, s)) found.push_back(std::move(s));
  }
  return finish(std::move(found), cfg);
}

std::vector<Solution> brute_force_enumerate_parallel(const Graph& g, const EnumConfig& cfg, BruteForceBudget budget) {
  cfg.validate(g);
  const int universe = subset_universe(g, cfg, budget);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << universe);
  std::vector<Solution> found;
#pragma omp parallel
  {
    std::vector<Solution> local;
#pragma omp for schedule(dynamic, 4096) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      Solution s = decode(static_cast<std::uint64_t>(mask));
      if (is_solution(g, cfg, s)) local.push_back(std::move(s));
    }
#pragma omp critical
    found.insert(found.end(), std::make_move_iterator(local.begin()), std::make_move_iterator(local.end()));
  }
  return finish(std::move(found), cfg);
}

}  // namespace girthscope
