#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "girthscope/graph.hpp"

namespace girthscope {

struct VerifyOptions {
  /// Every labeled connected graph up to this order.
  VertexId exhaustive_max_n = 5;
  int random_graphs = 50;
  VertexId random_max_n = 6;
  EdgeId random_max_m = 7;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::uint64_t graphs = 0;
  std::uint64_t checks = 0;
  /// One line per disagreement.
  std::vector<std::string> mismatches;

  bool ok() const { return mismatches.empty(); }
};

/// Cross-checks the incremental engines, the baseline and brute force on a
/// graph corpus, for induced and edge mode, connected and arbitrary
/// solutions, and k in {3, 4, 5, inf}.
VerifyReport run_verification(const VerifyOptions& options = {});

/// Labeled connected graphs with 1..max_n vertices, in order of n then edge mask.
std::vector<Graph> connected_labeled_graphs(VertexId max_n);

/// Seeded random graphs with 1..max_n vertices and at most max_m edges.
std::vector<Graph> random_small_graphs(std::uint64_t seed, int count, VertexId max_n, EdgeId max_m);

}  // namespace girthscope
