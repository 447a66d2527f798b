// Serial vs OpenMP kernels, and the incremental engines against the subset
// filter. Prints one markdown table row per case (median of --repeat runs).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include <omp.h>

#include "girthscope/edge_fast.hpp"
#include "girthscope/enumerate.hpp"
#include "girthscope/induced_fast.hpp"
#include "girthscope/variants.hpp"

using namespace girthscope;

namespace {

double median_seconds(int repeat, const std::function<std::uint64_t()>& run, std::uint64_t& result) {
  std::vector<double> t;
  for (int i = 0; i < repeat; ++i) {
    const auto start = std::chrono::steady_clock::now();
    result = run();
    t.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

void row(const char* name, int repeat, const std::function<std::uint64_t()>& reference,
         const std::function<std::uint64_t()>& candidate) {
  std::uint64_t a = 0, b = 0;
  const double ta = median_seconds(repeat, reference, a);
  const double tb = median_seconds(repeat, candidate, b);
  std::printf("| %-32s | %10llu | %10.4f | %10.4f | %7.2fx | %s |\n", name, static_cast<unsigned long long>(a), ta, tb,
              tb > 0 ? ta / tb : 0.0, a == b ? "ok" : "MISMATCH");
}

EnumConfig edge_cfg(Length k) {
  EnumConfig cfg;
  cfg.k = k;
  cfg.mode = Mode::kEdge;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  int repeat = 3;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--repeat") repeat = std::max(1, std::atoi(argv[i + 1]));

  const auto ignore = [](std::span<const std::int32_t>, std::uint64_t) { return true; };
  std::printf("threads: %d\n\n", omp_get_max_threads());
  std::printf("| case                             |  solutions |  reference |  candidate | speedup | check |\n");
  std::printf("|----------------------------------|-----------:|-----------:|-----------:|--------:|-------|\n");

  const auto k6 = make_complete(6);
  const auto k7 = make_complete(7);
  const auto petersen = make_petersen();
  BruteForceBudget wide{24, 24};

  row("brute K7 k=4: serial/omp", repeat, [&] { return brute_force_enumerate(k7, edge_cfg(Length(4)), wide).size(); },
      [&] { return brute_force_enumerate_parallel(k7, edge_cfg(Length(4)), wide).size(); });
  row("brute Petersen k=5 induced", repeat,
      [&] {
        EnumConfig c;
        c.k = Length(5);
        return brute_force_enumerate(petersen, c).size();
      },
      [&] {
        EnumConfig c;
        c.k = Length(5);
        return brute_force_enumerate_parallel(petersen, c).size();
      });

  for (auto k : {Length(4), Length(5)}) {
    const std::string name = "extremal n=7 k=" + k.to_string() + ": serial/omp";
    row(name.c_str(), repeat, [&] { return densest_girth_graphs(7, k).witnesses.size(); },
        [&] {
          ExtremalOptions o;
          o.parallel = true;
          return densest_girth_graphs(7, k, o).witnesses.size();
        });
  }

  row("K6 k=4 edge: brute/fast", repeat, [&] { return brute_force_enumerate(k6, edge_cfg(Length(4))).size(); },
      [&] { return enumerate_edges_fast(k6, edge_cfg(Length(4)), ignore); });
  row("K7 k=4 edge: brute/fast", repeat, [&] { return brute_force_enumerate(k7, edge_cfg(Length(4)), wide).size(); },
      [&] { return enumerate_edges_fast(k7, edge_cfg(Length(4)), ignore); });
  row("K7 k=4 edge: baseline/fast", repeat, [&] { return enumerate_baseline(k7, edge_cfg(Length(4)), ignore); },
      [&] { return enumerate_edges_fast(k7, edge_cfg(Length(4)), ignore); });
  row("Petersen k=5 induced: base/fast", repeat,
      [&] {
        EnumConfig c;
        c.k = Length(5);
        return enumerate_baseline(petersen, c, ignore);
      },
      [&] { return enumerate_induced_fast(petersen, Length(5), ignore); });
  return 0;
}
