#include "girthscope/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "girthscope/edge_fast.hpp"
#include "girthscope/errors.hpp"
#include "girthscope/induced_fast.hpp"

namespace girthscope {

const EngineTiming* BenchReport::find(const std::string& engine) const {
  for (const auto& e : engines)
    if (e.engine == engine) return &e;
  return nullptr;
}

std::optional<double> BenchReport::speedup_over(const std::string& other) const {
  const auto* f = find("fast");
  const auto* o = find(other);
  if (!f || !o || !f->ran || !o->ran || f->seconds <= 0) return std::nullopt;
  return o->seconds / f->seconds;
}

namespace {

template <class F>
double timed(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

BenchReport bench_compare(const Graph& g, std::string graph_name, Length k, Mode mode, const BenchOptions& options) {
  EnumConfig cfg;
  cfg.k = k;
  cfg.mode = mode;
  cfg.limit = options.limit;
  cfg.validate(g);

  BenchReport report;
  report.graph = std::move(graph_name);
  report.k = k;
  report.mode = mode;
  const auto ignore = [](std::span<const std::int32_t>, std::uint64_t) { return true; };

  EngineTiming brute;
  brute.engine = "brute";
  if (!options.run_brute) {
    brute.skipped = "disabled";
  } else {
    try {
      std::vector<Solution> out;
      brute.seconds = timed([&] { out = brute_force_enumerate(g, cfg, options.budget); });
      brute.solutions = out.size();
      brute.ran = true;
    } catch (const BudgetError& e) {
      brute.skipped = e.what();
    }
  }
  report.engines.push_back(brute);

  EngineTiming baseline;
  baseline.engine = "baseline";
  if (!options.run_baseline) {
    baseline.skipped = "disabled";
  } else {
    EnumStats stats;
    baseline.seconds = timed([&] { baseline.solutions = enumerate_baseline(g, cfg, ignore, &stats); });
    baseline.max_depth = stats.max_depth;
    baseline.ran = true;
  }
  report.engines.push_back(baseline);

  EngineTiming fast;
  fast.engine = "fast";
  if (mode == Mode::kInduced) {
    InducedStats stats;
    fast.seconds = timed([&] { fast.solutions = enumerate_induced_fast(g, cfg, ignore, &stats); });
    fast.max_depth = stats.max_depth;
  } else {
    EdgeStats stats;
    fast.seconds = timed([&] { fast.solutions = enumerate_edges_fast(g, cfg, ignore, &stats); });
    fast.max_depth = stats.max_depth;
  }
  fast.ran = true;
  report.engines.push_back(fast);

  for (const auto& e : report.engines)
    if (e.ran && e.solutions != fast.solutions) report.ok = false;
  return report;
}

std::string format_bench(const BenchReport& report) {
  std::ostringstream os;
  os << std::setprecision(6);
  os << "graph=" << report.graph << "\n"
     << "k=" << report.k << "\n"
     << "mode=" << (report.mode == Mode::kInduced ? "induced" : "edge") << "\n";
  for (const auto& e : report.engines) {
    if (!e.ran) {
      os << e.engine << ".skipped=" << e.skipped << "\n";
      continue;
    }
    os << e.engine << ".solutions=" << e.solutions << "\n"
       << e.engine << ".seconds=" << e.seconds << "\n"
       << e.engine << ".seconds_per_solution=" << e.seconds_per_solution() << "\n";
    // Brute force has no recursion tree.
    if (e.engine != "brute") os << e.engine << ".max_depth=" << e.max_depth << "\n";
  }
  for (const char* other : {"brute", "baseline"})
    if (auto s = report.speedup_over(other)) os << "speedup_over_" << other << "=" << *s << "\n";
  os << "status=" << (report.ok ? "OK" : "FAILED") << "\n";
  return os.str();
}

}  // namespace girthscope
