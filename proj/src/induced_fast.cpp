#include "girthscope/induced_fast.hpp"

#include <algorithm>

namespace girthscope {

namespace {

/// Second-smallest route length from u to w over first edges {u, y},
/// y in S + {w}: deleting the best first edge leaves the runner-up.
Length scan_second(const InducedEnumState& st, VertexId u, VertexId w) {
  Length first = kInfinite;
  Length second = kInfinite;
  for (const auto& nb : st.graph().neighbors(u)) {
    Length route;
    if (nb.vertex == w)
      route = Length(1);
    else if (st.status(nb.vertex) == VertexStatus::kSolution)
      route = st.dist(nb.vertex, w) + 1;
    else
      continue;
    if (route < first) {
      second = first;
      first = route;
    } else if (route < second) {
      second = route;
    }
  }
  return first.is_infinite() ? kInfinite : second;
}

}  // namespace

void InducedEnumState::layout(std::vector<VertexId> solution, std::vector<VertexId> cand) {
  solution_ = std::move(solution);
  cand_ = std::move(cand);
  pos_.assign(static_cast<std::size_t>(g_->n()), -1);
  for (std::size_t i = 0; i < solution_.size(); ++i) pos_[static_cast<std::size_t>(solution_[i])] = static_cast<std::int32_t>(i);
  for (std::size_t i = 0; i < cand_.size(); ++i) pos_[static_cast<std::size_t>(cand_[i])] = static_cast<std::int32_t>(i);
  dist_.assign((solution_.size() + cand_.size()) * cand_.size(), kInfinite);
  tad_.assign(cand_.size() * cand_.size(), kInfinite);
}

InducedEnumState InducedEnumState::seed(const Graph& g, Length k, VertexId v, std::span<const VertexId> done) {
  if (v < 0 || v >= g.n()) throw ValidationError("seed vertex outside graph");
  InducedEnumState st(g, k);
  st.status_.assign(static_cast<std::size_t>(g.n()), VertexStatus::kUnreached);
  for (auto d : done) st.status_[static_cast<std::size_t>(d)] = VertexStatus::kDoneExcluded;
  if (st.status(v) == VertexStatus::kDoneExcluded) throw ContractError("seed vertex is excluded");
  st.status_[static_cast<std::size_t>(v)] = VertexStatus::kSolution;
  std::vector<VertexId> cand;
  for (const auto& nb : g.neighbors(v))
    if (st.status(nb.vertex) == VertexStatus::kUnreached) {
      st.status_[static_cast<std::size_t>(nb.vertex)] = VertexStatus::kCandidate;
      cand.push_back(nb.vertex);
    }
  st.layout({v}, std::move(cand));
  // Every candidate hangs off v: distance 1 to v, 1 or 2 between each other.
  for (std::size_t c = 0; c < st.cand_.size(); ++c) {
    st.dist_at(0, c) = Length(1);
    for (std::size_t r = 0; r < st.cand_.size(); ++r)
      st.dist_at(1 + r, c) = r == c ? Length(0) : Length(g.has_edge(st.cand_[r], st.cand_[c]) ? 1 : 2);
  }
  for (std::size_t a = 0; a < st.cand_.size(); ++a)
    for (std::size_t b = 0; b < st.cand_.size(); ++b)
      if (a != b) st.tad_at(a, b) = scan_second(st, st.cand_[a], st.cand_[b]);
  return st;
}

Length InducedEnumState::dist(VertexId x, VertexId u) const {
  if (!in_range(x) || !in_range(u) || status(u) != VertexStatus::kCandidate) return kInfinite;
  if (x == u) return Length(0);
  return dist_[row(x) * cand_.size() + col(u)];
}

Length InducedEnumState::tad(VertexId u, VertexId w) const {
  if (!in_range(u) || !in_range(w) || !is_candidate(u) || !is_candidate(w) || u == w) return kInfinite;
  return tad_[col(u) * cand_.size() + col(w)];
}

void InducedEnumState::mark_done(VertexId v) {
  if (!in_range(v) || !is_candidate(v)) throw ContractError("mark_done on a non-candidate");
  status_[static_cast<std::size_t>(v)] = VertexStatus::kDoneExcluded;
}

std::vector<VertexId> filter_old_candidates(const InducedEnumState& state, VertexId v, InducedStats* stats) {
  if (!state.is_candidate(v)) throw ContractError("filter_old_candidates: v is not a candidate");
  std::vector<VertexId> kept;
  for (auto u : state.candidates()) {
    if (u == v || !state.is_candidate(u)) continue;
    if (stats) ++stats->filtered_pairs;
    if (state.dist(u, v) + state.tad(u, v) >= state.k()) kept.push_back(u);
  }
  return kept;
}

std::vector<VertexId> adopt_new_candidates(const InducedEnumState& state, VertexId v) {
  if (!state.is_candidate(v)) throw ContractError("adopt_new_candidates: v is not a candidate");
  std::vector<VertexId> fresh;
  for (const auto& nb : state.graph().neighbors(v))
    if (state.status(nb.vertex) == VertexStatus::kUnreached) fresh.push_back(nb.vertex);
  return fresh;
}

void update_dist(const InducedEnumState& parent, VertexId v, InducedEnumState& child) {
  const Graph& g = parent.graph();
  auto was = [&](VertexId x) { return parent.status(x); };
  const std::size_t width = child.cand_.size();
  const std::size_t rows = child.solution_.size() + width;
  for (std::size_t r = 0; r < rows; ++r) {
    const VertexId x = r < child.solution_.size() ? child.solution_[r] : child.cand_[r - child.solution_.size()];
    for (std::size_t c = 0; c < width; ++c) {
      const VertexId u = child.cand_[c];
      Length d;
      if (x == u) {
        d = Length(0);
      } else if (was(u) == VertexStatus::kCandidate) {
        if (x == v)
          d = parent.dist(v, u);
        else if (was(x) == VertexStatus::kUnreached)
          d = std::min(g.has_edge(x, u) ? Length(1) : kInfinite, parent.dist(v, u) + 1);
        else
          d = std::min(parent.dist(x, u), parent.dist(x, v) + parent.dist(v, u));
      } else {  // u adopted: its only neighbor in S + v is v
        if (x == v)
          d = Length(1);
        else if (was(x) == VertexStatus::kSolution)
          d = parent.dist(x, v) + 1;
        else if (was(x) == VertexStatus::kCandidate)
          d = std::min(g.has_edge(x, u) ? Length(1) : kInfinite, parent.dist(x, v) + 1);
        else
          d = Length(g.has_edge(x, u) ? 1 : 2);
      }
      child.dist_at(r, c) = d;
    }
  }
}

void update_second(const InducedEnumState& parent, VertexId v, InducedEnumState& child, InducedStats* stats) {
  const std::size_t width = child.cand_.size();
  const Length k = parent.k();
  for (std::size_t a = 0; a < width; ++a) {
    const VertexId u = child.cand_[a];
    for (std::size_t b = 0; b < width; ++b) {
      if (a == b) continue;
      const VertexId w = child.cand_[b];
      Length t;
      if (parent.is_candidate(u) && parent.is_candidate(w)) {
        const Length p1 = parent.dist(u, w);
        const Length p2 = parent.dist(u, v) + parent.dist(v, w);
        const Length p3 = parent.tad(u, w);
        if (p1 + p3 < k) {
          if (stats) ++(p1 < p2 ? stats->tad_shortcut_kept : stats->tad_shortcut_via_added);
          t = std::min(std::max(p1, p2), p3);
        } else {
          if (stats) ++stats->tad_rescanned;
          t = scan_second(child, u, w);
        }
      } else {
        if (stats) ++stats->tad_fresh;
        t = scan_second(child, u, w);
      }
      child.tad_at(a, b) = t;
    }
  }
}

InducedEnumState next_state(const InducedEnumState& parent, VertexId v, InducedStats* stats) {
  auto kept = filter_old_candidates(parent, v, stats);
  auto fresh = adopt_new_candidates(parent, v);

  InducedEnumState child(parent.graph(), parent.k());
  child.status_ = parent.status_;
  child.status_[static_cast<std::size_t>(v)] = VertexStatus::kSolution;
  for (auto u : parent.candidates())
    if (u != v && parent.is_candidate(u)) child.status_[static_cast<std::size_t>(u)] = VertexStatus::kGirthExcluded;
  for (auto u : kept) child.status_[static_cast<std::size_t>(u)] = VertexStatus::kCandidate;
  for (auto u : fresh) child.status_[static_cast<std::size_t>(u)] = VertexStatus::kCandidate;

  std::vector<VertexId> solution(parent.solution().begin(), parent.solution().end());
  solution.insert(std::upper_bound(solution.begin(), solution.end(), v), v);
  std::vector<VertexId> cand;
  cand.reserve(kept.size() + fresh.size());
  std::merge(kept.begin(), kept.end(), fresh.begin(), fresh.end(), std::back_inserter(cand));
  child.layout(std::move(solution), std::move(cand));

  update_dist(parent, v, child);
  update_second(parent, v, child, stats);
  return child;
}

namespace {

class InducedRun {
 public:
  InducedRun(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, InducedStats* stats, const InducedHooks* hooks)
      : g_(g), cfg_(cfg), sink_(sink), stats_(stats), hooks_(hooks) {}

  std::uint64_t run() {
    if (stats_) ++stats_->iterations;
    if (cfg_.include_empty && !emit({})) return count_;
    std::vector<VertexId> done;
    for (VertexId v = 0; v < g_.n(); ++v) {
      auto child = InducedEnumState::seed(g_, cfg_.k, v, done);
      if (!recurse(child, 1)) break;
      done.push_back(v);
    }
    return count_;
  }

 private:
  bool emit(std::span<const VertexId> s) {
    if (cfg_.limit && count_ >= *cfg_.limit) return false;
    const bool more = sink_(s, count_);
    ++count_;
    return more && !(cfg_.limit && count_ >= *cfg_.limit);
  }

  bool recurse(InducedEnumState& state, std::uint64_t depth) {
    if (stats_) {
      ++stats_->iterations;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    if (hooks_ && hooks_->on_state) hooks_->on_state(state);
    if (!emit(state.solution())) return false;
    const std::vector<VertexId> order(state.candidates().begin(), state.candidates().end());
    for (auto v : order) {
      auto child = next_state(state, v, stats_);
      if (hooks_ && hooks_->on_filter)
        for (auto u : order)
          if (u != v && state.is_candidate(u)) hooks_->on_filter(state, u, v, child.is_candidate(u));
      if (!recurse(child, depth + 1)) return false;
      state.mark_done(v);
    }
    return true;
  }

  const Graph& g_;
  const EnumConfig& cfg_;
  const SolutionSink& sink_;
  InducedStats* stats_;
  const InducedHooks* hooks_;
  std::uint64_t count_ = 0;
};

}  // namespace

std::uint64_t enumerate_induced_fast(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, InducedStats* stats,
                                     const InducedHooks* hooks) {
  cfg.validate(g);
  if (cfg.mode != Mode::kInduced || cfg.connectivity != Connectivity::kConnected || cfg.weighted)
    throw ValidationError("the fast induced engine handles connected, unweighted, induced enumeration only; use the baseline engine");
  if (cfg.limit && *cfg.limit == 0) return 0;
  return InducedRun(g, cfg, sink, stats, hooks).run();
}

std::uint64_t enumerate_induced_fast(const Graph& g, Length k, const SolutionSink& sink) {
  EnumConfig cfg;
  cfg.k = k;
  return enumerate_induced_fast(g, cfg, sink);
}

}  // namespace girthscope
