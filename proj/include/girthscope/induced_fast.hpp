#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "girthscope/enumerate.hpp"
#include "girthscope/graph.hpp"
#include "girthscope/length.hpp"

namespace girthscope {

enum class VertexStatus : std::uint8_t { kUnreached, kSolution, kCandidate, kGirthExcluded, kDoneExcluded };

/// Counters for the incremental induced enumerator.
struct InducedStats {
  std::uint64_t iterations = 0;
  std::uint64_t max_depth = 0;
  /// Candidate-pair tests dist + tad >= k.
  std::uint64_t filtered_pairs = 0;
  /// Constant-time second-distance updates where the old shortest path stays
  /// strictly shorter than the detour through the added vertex (p1 < p2).
  std::uint64_t tad_shortcut_kept = 0;
  /// Constant-time updates where the detour through the added vertex is at
  /// least as short (p2 <= p1).
  std::uint64_t tad_shortcut_via_added = 0;
  /// Old pairs recomputed by scanning neighbors (dist + tad >= k before the step).
  std::uint64_t tad_rescanned = 0;
  /// Pairs involving a freshly adopted candidate.
  std::uint64_t tad_fresh = 0;
};

/// Per-iteration state of the incremental induced enumerator.
///
/// For the solution S and candidate set C it holds
///   dist(x, u): distance between x and u in G[S + {x, u}], x in S + C, u in C
///   tad(u, w):  the same distance after deleting the first edge (at u) of a
///               shortest u-w path, u, w in C
/// Queries outside those ranges answer infinite.
class InducedEnumState {
 public:
  /// S = {v}; every vertex in `done` is excluded for the whole subtree.
  static InducedEnumState seed(const Graph& g, Length k, VertexId v, std::span<const VertexId> done);

  const Graph& graph() const { return *g_; }
  Length k() const { return k_; }
  /// Ascending.
  std::span<const VertexId> solution() const { return solution_; }
  /// Ascending; entries later marked done keep their slot but report kDoneExcluded.
  std::span<const VertexId> candidates() const { return cand_; }
  VertexStatus status(VertexId v) const { return status_[static_cast<std::size_t>(v)]; }
  bool is_candidate(VertexId v) const { return status(v) == VertexStatus::kCandidate; }

  Length dist(VertexId x, VertexId u) const;
  Length tad(VertexId u, VertexId w) const;

  /// Excludes candidate `v` from this state (and every child built after).
  void mark_done(VertexId v);

 private:
  friend InducedEnumState next_state(const InducedEnumState& parent, VertexId v, InducedStats* stats);
  friend void update_dist(const InducedEnumState& parent, VertexId v, InducedEnumState& child);
  friend void update_second(const InducedEnumState& parent, VertexId v, InducedEnumState& child, InducedStats* stats);

  InducedEnumState(const Graph& g, Length k) : g_(&g), k_(k) {}

  /// Places S and C, assigns slots and sizes the tables.
  void layout(std::vector<VertexId> solution, std::vector<VertexId> cand);
  std::size_t row(VertexId x) const {
    const auto p = static_cast<std::size_t>(pos_[static_cast<std::size_t>(x)]);
    return status(x) == VertexStatus::kSolution ? p : solution_.size() + p;
  }
  std::size_t col(VertexId u) const { return static_cast<std::size_t>(pos_[static_cast<std::size_t>(u)]); }
  Length& dist_at(std::size_t r, std::size_t c) { return dist_[r * cand_.size() + c]; }
  Length& tad_at(std::size_t r, std::size_t c) { return tad_[r * cand_.size() + c]; }
  bool in_range(VertexId x) const {
    return x >= 0 && x < g_->n() && (status(x) == VertexStatus::kSolution || status(x) == VertexStatus::kCandidate);
  }

  const Graph* g_;
  Length k_;
  std::vector<VertexId> solution_;
  std::vector<VertexId> cand_;
  std::vector<VertexStatus> status_;
  /// Index of a vertex in solution_ or cand_, according to its status.
  std::vector<std::int32_t> pos_;
  /// (|S| + |C|) x |C|, rows S then C.
  std::vector<Length> dist_;
  /// |C| x |C|.
  std::vector<Length> tad_;
};

/// Old candidates u != v that stay candidates once v joins S:
/// dist(u, v) + tad(u, v) >= k. O(|C|).
std::vector<VertexId> filter_old_candidates(const InducedEnumState& state, VertexId v, InducedStats* stats = nullptr);

/// Unreached neighbors of v. They attach to S + v through v alone, so they
/// keep the girth.
std::vector<VertexId> adopt_new_candidates(const InducedEnumState& state, VertexId v);

/// Fills child.dist for S + v. Old pairs relax through v; rows and columns of
/// adopted vertices come from their single attachment at v.
void update_dist(const InducedEnumState& parent, VertexId v, InducedEnumState& child);

/// Fills child.tad after update_dist. Old pairs with dist + tad < k take the
/// constant-time min(max(p1, p2), p3) update; everything else is recomputed
/// from the neighbors of u inside S + v + w.
void update_second(const InducedEnumState& parent, VertexId v, InducedEnumState& child, InducedStats* stats = nullptr);

/// Child state for S + v, built from `parent` in the order filter, adopt,
/// update_dist, update_second.
InducedEnumState next_state(const InducedEnumState& parent, VertexId v, InducedStats* stats = nullptr);

struct InducedHooks {
  /// Called on entry to every iteration with a nonempty solution.
  std::function<void(const InducedEnumState&)> on_state;
  /// Called for every old-candidate test: `kept` is the outcome of
  /// dist(u, v) + tad(u, v) >= k when v joins the solution.
  std::function<void(const InducedEnumState& parent, VertexId u, VertexId v, bool kept)> on_filter;
};

/// Connected induced subgraphs of girth >= k on an unweighted graph.
/// `cfg` must select induced, connected, unweighted; include_empty and limit
/// apply. Emits the same sequence as enumerate_baseline for that config.
std::uint64_t enumerate_induced_fast(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, InducedStats* stats = nullptr,
                                     const InducedHooks* hooks = nullptr);

std::uint64_t enumerate_induced_fast(const Graph& g, Length k, const SolutionSink& sink);

}  // namespace girthscope
