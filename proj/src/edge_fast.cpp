#include "girthscope/edge_fast.hpp"

#include <algorithm>

namespace girthscope {

EdgeEnumState EdgeEnumState::seed(const Graph& g, Length k, EdgeId e, std::span<const EdgeId> done) {
  if (e < 0 || e >= g.m()) throw ValidationError("seed edge outside graph");
  auto excluded = std::make_shared<std::vector<std::uint8_t>>(static_cast<std::size_t>(g.m()), 0);
  for (auto d : done) (*excluded)[static_cast<std::size_t>(d)] = 1;
  if ((*excluded)[static_cast<std::size_t>(e)]) throw ContractError("seed edge is excluded");

  EdgeEnumState st(g, k);
  st.excluded_ = excluded;
  const auto& ed = g.edge(e);
  st.solution_ = {e};
  st.vertices_ = {ed.u, ed.v};
  st.slot_[static_cast<std::size_t>(ed.u)] = 0;
  st.slot_[static_cast<std::size_t>(ed.v)] = 1;
  st.dist_ = {Length(0), Length(1), Length(1), Length(0)};
  // A simple graph has no second edge inside {u, v}, so every candidate is outer.
  for (VertexId end : {ed.u, ed.v})
    for (const auto& nb : g.neighbors(end))
      if (nb.edge != e && !st.excluded(nb.edge)) st.cout_.push_back(nb.edge);
  std::sort(st.cout_.begin(), st.cout_.end());
  return st;
}

bool EdgeEnumState::is_inner(EdgeId e) const {
  const auto& ed = g_->edge(e);
  return contains_vertex(ed.u) && contains_vertex(ed.v);
}

Length EdgeEnumState::dist(VertexId x, VertexId y) const {
  if (x < 0 || y < 0 || x >= g_->n() || y >= g_->n() || !contains_vertex(x) || !contains_vertex(y)) return kInfinite;
  return at(x, y);
}

std::vector<VertexId> EdgeEnumState::attachment() const {
  std::vector<VertexId> a;
  for (const auto* list : {&cin_, &cout_})
    for (auto e : *list)
      for (VertexId x : {g_->edge(e).u, g_->edge(e).v})
        if (contains_vertex(x)) a.push_back(x);
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void EdgeEnumState::exclude(EdgeId e) {
  for (auto* list : {&cin_, &cout_}) {
    auto it = std::lower_bound(list->begin(), list->end(), e);
    if (it != list->end() && *it == e) {
      list->erase(it);
      (*excluded_)[static_cast<std::size_t>(e)] = 1;
      return;
    }
  }
  throw ContractError("exclude: edge is not a candidate");
}

void EdgeEnumState::release(EdgeId e) { (*excluded_)[static_cast<std::size_t>(e)] = 0; }

EdgeId select_edge(const EdgeEnumState& state) {
  if (!state.inner_candidates().empty()) return state.inner_candidates().front();
  if (!state.outer_candidates().empty()) return state.outer_candidates().front();
  throw ContractError("select_edge on a state without candidates");
}

namespace {

/// For an outer edge, the endpoint already in V(G[S]) first.
std::pair<VertexId, VertexId> oriented(const EdgeEnumState& state, EdgeId e) {
  const auto& ed = state.graph().edge(e);
  return state.contains_vertex(ed.u) ? std::pair(ed.u, ed.v) : std::pair(ed.v, ed.u);
}

}  // namespace

bool pair_girth_ok(const EdgeEnumState& state, EdgeId e, EdgeId f) {
  const Graph& g = state.graph();
  const auto [x, y] = std::pair(g.edge(f).u, g.edge(f).v);
  if (state.is_inner(e)) {
    // An outer f only adds a pendant vertex.
    if (!state.is_inner(f)) return true;
    const auto [u, v] = std::pair(g.edge(e).u, g.edge(e).v);
    const Length path = std::min({state.dist(x, y), state.dist(x, u) + 1 + state.dist(v, y), state.dist(x, v) + 1 + state.dist(u, y)});
    return path + 1 >= state.k();
  }
  const auto [u, v] = oriented(state, e);
  if (x != v && y != v) return true;
  const VertexId w = x == v ? y : x;
  if (w == u || !state.contains_vertex(w)) return true;
  // The only new cycles run u -> v -> w and back to u inside G[S].
  return state.dist(u, w) + 2 >= state.k();
}

CandidateUpdate update_edge_cand(const EdgeEnumState& state, EdgeId e) {
  const Graph& g = state.graph();
  CandidateUpdate out;
  if (state.is_inner(e)) {
    for (auto f : state.inner_candidates())
      if (f != e && pair_girth_ok(state, e, f)) out.inner.push_back(f);
    out.outer.assign(state.outer_candidates().begin(), state.outer_candidates().end());
    return out;
  }
  const auto [u, v] = oriented(state, e);
  const auto cout = state.outer_candidates();
  std::vector<EdgeId> promoted;
  std::vector<EdgeId> reached;
  for (const auto& nb : g.neighbors(v)) {
    const EdgeId f = nb.edge;
    if (f == e) continue;
    if (state.contains_vertex(nb.vertex)) {
      // {v, w} with w in V(G[S]) was an outer candidate unless the done set removed it.
      if (!std::binary_search(cout.begin(), cout.end(), f)) continue;
      if (pair_girth_ok(state, e, f)) promoted.push_back(f);
    } else if (!state.excluded(f)) {
      reached.push_back(f);
    }
  }
  std::sort(promoted.begin(), promoted.end());
  std::sort(reached.begin(), reached.end());
  std::vector<EdgeId> kept_inner;
  for (auto f : state.inner_candidates())
    if (f != e) kept_inner.push_back(f);
  std::merge(kept_inner.begin(), kept_inner.end(), promoted.begin(), promoted.end(), std::back_inserter(out.inner));
  std::vector<EdgeId> kept_outer;
  for (auto f : cout)
    if (f != e && g.edge(f).u != v && g.edge(f).v != v) kept_outer.push_back(f);
  std::merge(kept_outer.begin(), kept_outer.end(), reached.begin(), reached.end(), std::back_inserter(out.outer));
  return out;
}

void update_dist_s(const EdgeEnumState& parent, EdgeId e, EdgeEnumState& child) {
  const std::size_t old_n = parent.vertices_.size();
  const std::size_t new_n = child.vertices_.size();
  child.dist_.assign(new_n * new_n, kInfinite);
  if (parent.is_inner(e)) {
    const VertexId u = parent.graph().edge(e).u;
    const VertexId v = parent.graph().edge(e).v;
    for (std::size_t i = 0; i < old_n; ++i) {
      const VertexId x = parent.vertices_[i];
      const Length xu = parent.at(x, u);
      const Length xv = parent.at(x, v);
      for (std::size_t j = 0; j < old_n; ++j) {
        const VertexId y = parent.vertices_[j];
        child.dist_[i * new_n + j] = std::min({parent.dist_[i * old_n + j], xu + 1 + parent.at(v, y), xv + 1 + parent.at(u, y)});
      }
    }
    return;
  }
  // Outer: the new vertex is a pendant at u and takes the last slot.
  const auto [u, v] = oriented(parent, e);
  (void)v;
  for (std::size_t i = 0; i < old_n; ++i) {
    for (std::size_t j = 0; j < old_n; ++j) child.dist_[i * new_n + j] = parent.dist_[i * old_n + j];
    const Length via = parent.at(parent.vertices_[i], u) + 1;
    child.dist_[i * new_n + old_n] = via;
    child.dist_[old_n * new_n + i] = via;
  }
  child.dist_[old_n * new_n + old_n] = Length(0);
}

EdgeEnumState next_state(const EdgeEnumState& parent, EdgeId e, EdgeStats* stats) {
  if (!std::binary_search(parent.cin_.begin(), parent.cin_.end(), e) && !std::binary_search(parent.cout_.begin(), parent.cout_.end(), e))
    throw ContractError("next_state: edge is not a candidate");
  const bool inner = parent.is_inner(e);
  auto cand = update_edge_cand(parent, e);
  if (stats) {
    ++(inner ? stats->inner_steps : stats->outer_steps);
    stats->pair_checks += inner ? parent.cin_.size() : parent.graph().degree(oriented(parent, e).second);
  }

  EdgeEnumState child(parent.graph(), parent.k());
  child.solution_ = parent.solution_;
  child.solution_.insert(std::upper_bound(child.solution_.begin(), child.solution_.end(), e), e);
  child.vertices_ = parent.vertices_;
  child.slot_ = parent.slot_;
  if (!inner) {
    const VertexId v = oriented(parent, e).second;
    child.slot_[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(child.vertices_.size());
    child.vertices_.push_back(v);
  }
  child.excluded_ = parent.excluded_;
  child.cin_ = std::move(cand.inner);
  child.cout_ = std::move(cand.outer);
  update_dist_s(parent, e, child);
  return child;
}

namespace {

class EdgeRun {
 public:
  EdgeRun(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EdgeStats* stats, const EdgeHooks* hooks)
      : g_(g), cfg_(cfg), sink_(sink), stats_(stats), hooks_(hooks) {}

  std::uint64_t run() {
    if (stats_) ++stats_->iterations;
    if (cfg_.include_empty && !emit({})) return count_;
    for (EdgeId e = 0; e < g_.m(); ++e) {
      if (!root_child(e)) break;
      done_.push_back(e);
    }
    return count_;
  }

  std::uint64_t run_subtree(EdgeId first) {
    for (EdgeId e = 0; e < first; ++e) done_.push_back(e);
    root_child(first);
    return count_;
  }

 private:
  bool root_child(EdgeId e) {
    auto child = EdgeEnumState::seed(g_, cfg_.k, e, done_);
    return recurse(child, 1);
  }

  bool emit(std::span<const EdgeId> s) {
    if (cfg_.limit && count_ >= *cfg_.limit) return false;
    const bool more = sink_(s, count_);
    ++count_;
    return more && !(cfg_.limit && count_ >= *cfg_.limit);
  }

  bool recurse(EdgeEnumState& state, std::uint64_t depth) {
    if (stats_) {
      ++stats_->iterations;
      stats_->max_depth = std::max(stats_->max_depth, depth);
    }
    if (hooks_ && hooks_->on_state) hooks_->on_state(state, done_);
    if (hooks_ && hooks_->prune && hooks_->prune(state, done_)) return true;
    if (!emit(state.solution())) return false;
    const std::size_t mark = done_.size();
    bool more = true;
    while (more && state.has_candidates()) {
      const EdgeId e = select_edge(state);
      auto child = next_state(state, e, stats_);
      if (hooks_ && hooks_->on_step) hooks_->on_step(state, e, child);
      more = recurse(child, depth + 1);
      state.exclude(e);
      done_.push_back(e);
    }
    for (std::size_t i = mark; i < done_.size(); ++i) state.release(done_[i]);
    done_.resize(mark);
    return more;
  }

  const Graph& g_;
  const EnumConfig& cfg_;
  const SolutionSink& sink_;
  EdgeStats* stats_;
  const EdgeHooks* hooks_;
  std::vector<EdgeId> done_;
  std::uint64_t count_ = 0;
};

void check_edge_config(const Graph& g, const EnumConfig& cfg) {
  cfg.validate(g);
  if (cfg.mode != Mode::kEdge || cfg.connectivity != Connectivity::kConnected || cfg.weighted)
    throw ValidationError("the fast edge engine handles connected, unweighted, edge enumeration only; use the baseline engine");
}

}  // namespace

std::uint64_t enumerate_edges_fast(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EdgeStats* stats, const EdgeHooks* hooks) {
  check_edge_config(g, cfg);
  if (cfg.limit && *cfg.limit == 0) return 0;
  return EdgeRun(g, cfg, sink, stats, hooks).run();
}

std::uint64_t enumerate_edges_fast(const Graph& g, Length k, const SolutionSink& sink) {
  EnumConfig cfg;
  cfg.k = k;
  cfg.mode = Mode::kEdge;
  return enumerate_edges_fast(g, cfg, sink);
}

std::uint64_t enumerate_edges_fast_subtree(const Graph& g, const EnumConfig& cfg, EdgeId first, const SolutionSink& sink, EdgeStats* stats,
                                           const EdgeHooks* hooks) {
  check_edge_config(g, cfg);
  if (first < 0 || first >= g.m()) throw ValidationError("subtree edge outside graph");
  if (cfg.limit && *cfg.limit == 0) return 0;
  return EdgeRun(g, cfg, sink, stats, hooks).run_subtree(first);
}

}  // namespace girthscope
