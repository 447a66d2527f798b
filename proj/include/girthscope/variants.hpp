#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthscope/enumerate.hpp"
#include "girthscope/graph.hpp"
#include "girthscope/length.hpp"

namespace girthscope {

/// Weighted and/or non-connected enumeration on the baseline engine. Also
/// accepts the plain connected, unweighted configurations.
/// Throws ValidationError when `cfg.weighted` is set on an unweighted graph.
std::uint64_t enumerate_variant(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EnumStats* stats = nullptr);

struct ExtremalOptions {
  /// Connected witnesses via the incremental edge engine with pruning;
  /// otherwise every edge subgraph via the baseline engine (no pruning).
  bool connected = true;
  /// Stop after this many explored solutions and flag the result incomplete.
  std::optional<std::uint64_t> max_explored;
  /// Split the first level of the search across OpenMP threads.
  bool parallel = false;
};

struct ExtremalResult {
  VertexId n = 0;
  Length k;
  std::uint64_t max_edges = 0;
  /// Edge-id lists over make_complete(n), each ascending; the list is sorted.
  std::vector<Solution> witnesses;
  /// Solutions visited. In parallel runs this depends on scheduling.
  std::uint64_t explored = 0;
  bool complete = true;
  /// Set when witnesses were reduced to one per isomorphism class.
  bool up_to_isomorphism = false;
};

/// Densest subgraphs of K_n with girth >= k: the maximum edge count and every
/// labeled subgraph reaching it. Infinite k gives spanning trees.
/// Branches are cut when |S| + |candidates| + (edges with no endpoint in
/// V(G[S])) falls below the best size found so far, which never cuts a
/// subtree that could still reach the maximum.
ExtremalResult densest_girth_graphs(VertexId n, Length k, const ExtremalOptions& options = {});

/// One representative per isomorphism class, in first-seen order. Each
/// solution is an edge-id list over `host`; host.n() must be at most 8.
std::vector<Solution> distinct_up_to_isomorphism(const Graph& host, const std::vector<Solution>& solutions);

/// key=value lines followed by one "witness" line per witness (u-v pairs).
std::string format_extremal(const ExtremalResult& result);

}  // namespace girthscope
