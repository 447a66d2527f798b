#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "girthscope/enumerate.hpp"
#include "girthscope/graph.hpp"
#include "girthscope/length.hpp"

namespace girthscope {

struct EngineTiming {
  std::string engine;
  bool ran = false;
  /// Why the engine did not run (budget, unsupported configuration).
  std::string skipped;
  std::uint64_t solutions = 0;
  double seconds = 0;
  std::uint64_t max_depth = 0;

  double seconds_per_solution() const { return solutions ? seconds / static_cast<double>(solutions) : 0.0; }
};

struct BenchOptions {
  std::optional<std::uint64_t> limit;
  bool run_brute = true;
  bool run_baseline = true;
  BruteForceBudget budget{24, 24};
};

/// Timings of brute force, baseline and the incremental engine on one input.
/// `ok` is false when the engines that ran disagree on the solution count.
struct BenchReport {
  std::string graph;
  Length k;
  Mode mode = Mode::kEdge;
  std::vector<EngineTiming> engines;
  bool ok = true;

  const EngineTiming* find(const std::string& engine) const;
  /// Time ratio other / fast, when both ran and fast took measurable time.
  std::optional<double> speedup_over(const std::string& other) const;
};

/// Runs the engines serially on the same connected, unweighted configuration
/// and cross-checks their counts. With a limit every engine stops after that
/// many solutions.
BenchReport bench_compare(const Graph& g, std::string graph_name, Length k, Mode mode, const BenchOptions& options = {});

/// key=value lines; the last line is status=OK or status=FAILED.
std::string format_bench(const BenchReport& report);

}  // namespace girthscope
