#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "girthscope/enumerate.hpp"
#include "girthscope/graph.hpp"
#include "girthscope/length.hpp"

namespace girthscope {

struct EdgeStats {
  std::uint64_t iterations = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t inner_steps = 0;
  std::uint64_t outer_steps = 0;
  /// Candidate pairs checked with the closed-form pair girth test.
  std::uint64_t pair_checks = 0;
};

/// Per-iteration state of the incremental edge enumerator.
///
/// Candidates are split into inner edges (both endpoints already in V(G[S]))
/// and outer edges (exactly one endpoint there). dist(x, y) is the distance
/// between x and y in G[S] for x, y in V(G[S]).
class EdgeEnumState {
 public:
  /// S = {e}; edges in `done` are excluded for the whole subtree.
  static EdgeEnumState seed(const Graph& g, Length k, EdgeId e, std::span<const EdgeId> done);

  const Graph& graph() const { return *g_; }
  Length k() const { return k_; }
  /// Ascending edge ids.
  std::span<const EdgeId> solution() const { return solution_; }
  /// V(G[S]) in the order the vertices joined.
  std::span<const VertexId> vertices() const { return vertices_; }
  bool contains_vertex(VertexId v) const { return slot_[static_cast<std::size_t>(v)] >= 0; }
  /// Ascending.
  std::span<const EdgeId> inner_candidates() const { return cin_; }
  /// Ascending.
  std::span<const EdgeId> outer_candidates() const { return cout_; }
  bool has_candidates() const { return !cin_.empty() || !cout_.empty(); }
  std::size_t candidate_count() const { return cin_.size() + cout_.size(); }
  bool is_inner(EdgeId e) const;

  /// Infinite unless both vertices are in V(G[S]).
  Length dist(VertexId x, VertexId y) const;

  /// Vertices of V(G[S]) incident to at least one candidate edge, ascending.
  std::vector<VertexId> attachment() const;

  /// Drops candidate `e` (the done-set step after its subtree is finished).
  /// The exclusion is shared with every state derived from the same seed.
  void exclude(EdgeId e);
  /// Undoes exclude(e) in the shared exclusion flags when the excluding
  /// iteration returns.
  void release(EdgeId e);
  bool excluded(EdgeId e) const { return (*excluded_)[static_cast<std::size_t>(e)] != 0; }

 private:
  friend EdgeEnumState next_state(const EdgeEnumState& parent, EdgeId e, EdgeStats* stats);
  friend void update_dist_s(const EdgeEnumState& parent, EdgeId e, EdgeEnumState& child);

  EdgeEnumState(const Graph& g, Length k) : g_(&g), k_(k), slot_(static_cast<std::size_t>(g.n()), -1) {}

  std::size_t index(VertexId v) const { return static_cast<std::size_t>(slot_[static_cast<std::size_t>(v)]); }
  Length at(VertexId x, VertexId y) const { return dist_[index(x) * vertices_.size() + index(y)]; }

  const Graph* g_;
  Length k_;
  std::vector<EdgeId> solution_;
  std::vector<VertexId> vertices_;
  /// Position of a vertex in vertices_, or -1.
  std::vector<std::int32_t> slot_;
  std::vector<EdgeId> cin_;
  std::vector<EdgeId> cout_;
  /// |V(G[S])|^2, indexed by slot.
  std::vector<Length> dist_;
  /// One flag per edge, shared along a root subtree.
  std::shared_ptr<std::vector<std::uint8_t>> excluded_;
};

/// Lowest inner candidate if any, else lowest outer candidate. Picking inner
/// edges first keeps |inner candidates| <= |V(G[S])|.
/// ContractError when there is no candidate.
EdgeId select_edge(const EdgeEnumState& state);

/// Whether G[S + {e, f}] still has girth >= k, for candidates e (being added)
/// and f, in O(1) from the distance table. Only cycles through f can be new.
bool pair_girth_ok(const EdgeEnumState& state, EdgeId e, EdgeId f);

struct CandidateUpdate {
  std::vector<EdgeId> inner;
  std::vector<EdgeId> outer;
};

/// Candidate sets after adding e. Inner e: outer candidates are unchanged
/// and inner ones are re-validated. Outer e = {u, v} with v new: the edges
/// at v are classified (dropped, inner, or outer), the rest carry over.
CandidateUpdate update_edge_cand(const EdgeEnumState& state, EdgeId e);

/// Fills child's distance table for S + e (child vertices already placed).
void update_dist_s(const EdgeEnumState& parent, EdgeId e, EdgeEnumState& child);

EdgeEnumState next_state(const EdgeEnumState& parent, EdgeId e, EdgeStats* stats = nullptr);

struct EdgeHooks {
  /// Entry of every iteration with a nonempty solution, with the edges
  /// currently excluded by the done-set mechanism.
  std::function<void(const EdgeEnumState&, std::span<const EdgeId> excluded)> on_state;
  /// Each parent -> child transition.
  std::function<void(const EdgeEnumState& parent, EdgeId e, const EdgeEnumState& child)> on_step;
  /// Returning true skips the iteration and its whole subtree (not emitted).
  std::function<bool(const EdgeEnumState&, std::span<const EdgeId> excluded)> prune;
};

/// Connected edge subgraphs of girth >= k on an unweighted graph. `cfg` must
/// select edge mode, connected, unweighted; include_empty and limit apply.
/// The first level branches on every edge in id order, excluding the
/// earlier ones.
std::uint64_t enumerate_edges_fast(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EdgeStats* stats = nullptr,
                                   const EdgeHooks* hooks = nullptr);

std::uint64_t enumerate_edges_fast(const Graph& g, Length k, const SolutionSink& sink);

/// Root subtree of edge `first` only (the done set is every smaller edge id).
/// Used to shard the first level across workers; no empty solution.
std::uint64_t enumerate_edges_fast_subtree(const Graph& g, const EnumConfig& cfg, EdgeId first, const SolutionSink& sink,
                                           EdgeStats* stats = nullptr, const EdgeHooks* hooks = nullptr);

}  // namespace girthscope
