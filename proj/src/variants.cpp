#include "girthscope/variants.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "girthscope/edge_fast.hpp"
#include "girthscope/errors.hpp"

namespace girthscope {

std::uint64_t enumerate_variant(const Graph& g, const EnumConfig& cfg, const SolutionSink& sink, EnumStats* stats) {
  cfg.validate(g);
  return enumerate_baseline(g, cfg, sink, stats);
}

namespace {

/// Largest solutions seen by one worker.
struct Best {
  std::uint64_t size = 0;
  std::vector<Solution> witnesses;

  void offer(std::span<const std::int32_t> s) {
    if (s.size() < size) return;
    if (s.size() > size) {
      size = s.size();
      witnesses.clear();
    }
    witnesses.emplace_back(s.begin(), s.end());
  }
};

std::uint64_t pairs(std::uint64_t v) { return v < 2 ? 0 : v * (v - 1) / 2; }

EdgeHooks pruning_hooks(VertexId n, const std::atomic<std::uint64_t>& best) {
  EdgeHooks hooks;
  hooks.prune = [n, &best](const EdgeEnumState& st, std::span<const EdgeId>) {
    const std::uint64_t outside = static_cast<std::uint64_t>(n) - st.vertices().size();
    const std::uint64_t bound = st.solution().size() + st.candidate_count() + pairs(outside);
    return bound < best.load(std::memory_order_relaxed);
  };
  return hooks;
}

void raise(std::atomic<std::uint64_t>& best, std::uint64_t v) {
  auto cur = best.load(std::memory_order_relaxed);
  while (cur < v && !best.compare_exchange_weak(cur, v, std::memory_order_relaxed)) {
  }
}

ExtremalResult finish(VertexId n, Length k, std::vector<Best> parts, std::uint64_t explored, bool complete) {
  ExtremalResult r;
  r.n = n;
  r.k = k;
  r.explored = explored;
  r.complete = complete;
  for (const auto& p : parts) r.max_edges = std::max(r.max_edges, p.size);
  for (auto& p : parts)
    if (p.size == r.max_edges) std::move(p.witnesses.begin(), p.witnesses.end(), std::back_inserter(r.witnesses));
  std::sort(r.witnesses.begin(), r.witnesses.end());
  r.witnesses.erase(std::unique(r.witnesses.begin(), r.witnesses.end()), r.witnesses.end());
  return r;
}

}  // namespace

ExtremalResult densest_girth_graphs(VertexId n, Length k, const ExtremalOptions& options) {
  if (n < 1) throw ValidationError("extremal search needs n >= 1");
  const Graph kn = make_complete(n);
  EnumConfig cfg;
  cfg.k = k;
  cfg.mode = Mode::kEdge;
  cfg.connectivity = options.connected ? Connectivity::kConnected : Connectivity::kAny;
  cfg.validate(kn);

  std::atomic<std::uint64_t> explored{0};
  std::atomic<bool> stopped{false};
  auto admit = [&] {
    const auto seen = explored.fetch_add(1, std::memory_order_relaxed) + 1;
    if (options.max_explored && seen >= *options.max_explored) stopped.store(true, std::memory_order_relaxed);
    return !stopped.load(std::memory_order_relaxed);
  };
  if (options.max_explored && *options.max_explored == 0)
    return finish(n, k, {}, 0, false);

  if (!options.connected) {
    Best best;
    enumerate_baseline(kn, cfg, [&](std::span<const std::int32_t> s, std::uint64_t) {
      best.offer(s);
      return admit();
    });
    return finish(n, k, {std::move(best)}, explored.load(), !stopped.load());
  }

  // The empty solution only matters on K_1, which has no edge to branch on.
  Best empty;
  empty.witnesses.push_back({});
  admit();
  std::atomic<std::uint64_t> best_size{0};
  const EdgeHooks hooks = pruning_hooks(n, best_size);
  cfg.include_empty = false;

  auto shard = [&](EdgeId first, Best& local) {
    if (stopped.load(std::memory_order_relaxed)) return;
    enumerate_edges_fast_subtree(kn, cfg, first, [&](std::span<const std::int32_t> s, std::uint64_t) {
      local.offer(s);
      raise(best_size, local.size);
      return admit();
    }, nullptr, &hooks);
  };

  std::vector<Best> parts;
  if (options.parallel) {
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(dynamic, 1) nowait
      for (EdgeId e = 0; e < kn.m(); ++e) shard(e, local);
#pragma omp critical(girthscope_extremal_merge)
      parts.push_back(std::move(local));
    }
  } else {
    Best local;
    for (EdgeId e = 0; e < kn.m(); ++e) shard(e, local);
    parts.push_back(std::move(local));
  }
  parts.push_back(std::move(empty));
  return finish(n, k, std::move(parts), explored.load(), !stopped.load());
}

namespace {

/// Smallest adjacency bit pattern over all relabelings (upper triangle, row-major).
std::uint32_t canonical_code(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<VertexId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> bit(static_cast<std::size_t>(n * n));
  for (VertexId a = 0, b = 0; a < n; ++a)
    for (VertexId c = a + 1; c < n; ++c, ++b) bit[static_cast<std::size_t>(a * n + c)] = bit[static_cast<std::size_t>(c * n + a)] = b;
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t code = 0;
    for (auto [u, v] : edges) code |= std::uint32_t{1} << bit[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)] * n + perm[static_cast<std::size_t>(v)])];
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<Solution> distinct_up_to_isomorphism(const Graph& host, const std::vector<Solution>& solutions) {
  const VertexId n = host.n();
  if (n > 8) throw ValidationError("isomorphism filter supports at most 8 vertices");
  std::vector<Solution> out;
  std::vector<std::pair<std::vector<std::size_t>, std::uint32_t>> seen;
  for (const auto& s : solutions) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::size_t> degrees(static_cast<std::size_t>(n), 0);
    for (auto e : s) {
      const auto& ed = host.edge(e);
      edges.emplace_back(ed.u, ed.v);
      ++degrees[static_cast<std::size_t>(ed.u)];
      ++degrees[static_cast<std::size_t>(ed.v)];
    }
    std::sort(degrees.begin(), degrees.end());
    // Degree sequences first; the permutation search only runs on a match.
    bool duplicate = false;
    std::uint32_t code = 0;
    bool have_code = false;
    for (const auto& [deg, other] : seen) {
      if (deg != degrees) continue;
      if (!have_code) {
        code = canonical_code(n, edges);
        have_code = true;
      }
      if (code == other) {
        duplicate = true;
        break;
      }
    }
    if (duplicate) continue;
    if (!have_code) code = canonical_code(n, edges);
    seen.emplace_back(std::move(degrees), code);
    out.push_back(s);
  }
  return out;
}

std::string format_extremal(const ExtremalResult& result) {
  const Graph kn = make_complete(result.n);
  std::ostringstream os;
  os << "n=" << result.n << "\n"
     << "k=" << result.k << "\n"
     << "max_edges=" << result.max_edges << "\n"
     << "witnesses=" << result.witnesses.size() << "\n"
     << "up_to_isomorphism=" << (result.up_to_isomorphism ? "true" : "false") << "\n"
     << "explored=" << result.explored << "\n"
     << "complete=" << (result.complete ? "true" : "false") << "\n";
  for (const auto& w : result.witnesses) {
    os << "witness";
    for (auto e : w) os << " " << kn.edge(e).u << "-" << kn.edge(e).v;
    os << "\n";
  }
  return os.str();
}

}  // namespace girthscope
