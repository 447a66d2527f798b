#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "girthscope/graph.hpp"
#include "girthscope/length.hpp"

namespace girthscope {

enum class Mode { kInduced, kEdge };
enum class Connectivity { kConnected, kAny };

/// What to enumerate. Solutions are vertex sets (induced) or edge sets (edge).
struct EnumConfig {
  /// Girth threshold: every solution has girth >= k. Infinite means forests only.
  Length k = kInfinite;
  Mode mode = Mode::kInduced;
  Connectivity connectivity = Connectivity::kConnected;
  /// Use weighted cycle length (sum of edge weights). Requires a weighted graph.
  bool weighted = false;
  bool include_empty = true;
  /// Stop after this many solutions.
  std::optional<std::uint64_t> limit;

  /// Throws ValidationError when k < 3 (finite), or when `weighted` is set
  /// and the graph is not weighted.
  void validate(const Graph& g) const;
};

/// A solution: ascending vertex ids (induced) or edge ids (edge).
using Solution = std::vector<std::int32_t>;

/// Receives each solution once, with ordinals 0, 1, 2, ... Returning false
/// stops the run.
using SolutionSink = std::function<bool(std::span<const std::int32_t> solution, std::uint64_t ordinal)>;

/// Sink that appends into `out`.
SolutionSink collect_into(std::vector<Solution>& out);

/// Tree statistics of one run.
struct EnumStats {
  std::uint64_t iterations = 0;
  std::uint64_t max_depth = 0;
};

/// Partial solution of the baseline engine plus the elements removed by the
/// done-set mechanism on the current recursion path.
struct BaselineState {
  std::vector<std::int32_t> solution;
  /// One flag per vertex (induced) or edge (edge mode).
  std::vector<std::uint8_t> excluded;
};

/// Non-excluded elements x outside S such that S + x is a solution, in
/// ascending order. Each candidate is checked from scratch with the girth
/// module.
std::vector<std::int32_t> candidate_set_naive(const Graph& g, const BaselineState& state, const EnumConfig& cfg);

/// Binary-partition enumeration with naive candidate sets. Supports every
/// mode, connectivity and weighting. Candidates are branched in ascending id
/// order and each later sibling excludes the earlier ones. Returns the number
/// of solutions emitted.
std::uint64_t enumerate_baseline(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EnumStats* stats = nullptr);

struct BruteForceBudget {
  int max_induced_vertices = 20;
  int max_edge_count = 20;
};

/// Every subset, filtered by connectivity and girth; result sorted
/// lexicographically. Throws BudgetError past the budget. `limit` and
/// `include_empty` apply to the sorted result.
std::vector<Solution> brute_force_enumerate(const Graph& g, const EnumConfig& cfg, BruteForceBudget budget = {});

/// Same contract as brute_force_enumerate with the subset range split across
/// OpenMP threads.
std::vector<Solution> brute_force_enumerate_parallel(const Graph& g, const EnumConfig& cfg, BruteForceBudget budget = {});

/// Subgraph a solution denotes: G[S] for induced mode, G[E'] for edge mode.
Graph solution_graph(const Graph& g, Mode mode, std::span<const std::int32_t> solution);

/// Checks a single solution from scratch: connectivity (when required) and
/// girth >= k.
bool is_solution(const Graph& g, const EnumConfig& cfg, std::span<const std::int32_t> solution);

}  // namespace girthscope
