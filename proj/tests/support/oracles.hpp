#pragma once

// Test-only reference computations. Nothing here calls into the girth,
// enumeration or incremental-state code it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "girthscope/graph.hpp"
#include "girthscope/length.hpp"

namespace girthscope::testing {

inline constexpr std::uint64_t kNoCycle = ~std::uint64_t{0};

/// Shortest simple cycle by explicit path search rooted at each cycle's
/// smallest vertex. Edge weights are summed (1 on unweighted graphs).
inline std::uint64_t brute_shortest_cycle(const Graph& g, bool use_weights = false) {
  std::uint64_t best = kNoCycle;
  const auto n = g.n();
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  struct Frame {
    VertexId x;
    std::size_t next;
    std::uint64_t len;
    std::size_t edges;
  };
  for (VertexId s = 0; s < n; ++s) {
    std::vector<Frame> stack{{s, 0, 0, 0}};
    on_path[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& f = stack.back();
      auto nbs = g.neighbors(f.x);
      if (f.next == nbs.size()) {
        on_path[static_cast<std::size_t>(f.x)] = 0;
        stack.pop_back();
        continue;
      }
      const auto nb = nbs[f.next++];
      const std::uint64_t w = use_weights ? g.edge(nb.edge).weight : 1;
      if (nb.vertex == s && f.edges >= 2) {
        best = std::min(best, f.len + w);
      } else if (nb.vertex > s && !on_path[static_cast<std::size_t>(nb.vertex)]) {
        on_path[static_cast<std::size_t>(nb.vertex)] = 1;
        stack.push_back({nb.vertex, 0, f.len + w, f.edges + 1});
      }
    }
  }
  return best;
}

inline Length brute_girth(const Graph& g, bool use_weights = false) {
  const auto c = brute_shortest_cycle(g, use_weights);
  return c == kNoCycle ? kInfinite : Length(c);
}

/// Union-find connectivity over a vertex mask and an edge mask.
inline bool uf_connected(VertexId n, const std::vector<std::pair<VertexId, VertexId>>& edges, const std::vector<char>& present) {
  std::vector<VertexId> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (auto [u, v] : edges) parent[static_cast<std::size_t>(find(u))] = find(v);
  VertexId root = -1;
  for (VertexId v = 0; v < n; ++v) {
    if (!present[static_cast<std::size_t>(v)]) continue;
    if (root < 0) root = find(v);
    else if (find(v) != root) return false;
  }
  return true;
}

/// All-pairs distances by Floyd-Warshall restricted to `allowed` vertices.
inline std::vector<std::vector<Length>> fw_distances(const Graph& g, const std::vector<char>& allowed,
                                                     EdgeId skip_edge = -1) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Length>> d(n, std::vector<Length>(n, kInfinite));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = Length(0);
  for (EdgeId e = 0; e < g.m(); ++e) {
    const auto& ed = g.edge(e);
    if (e == skip_edge || !allowed[static_cast<std::size_t>(ed.u)] || !allowed[static_cast<std::size_t>(ed.v)]) continue;
    d[static_cast<std::size_t>(ed.u)][static_cast<std::size_t>(ed.v)] = Length(1);
    d[static_cast<std::size_t>(ed.v)][static_cast<std::size_t>(ed.u)] = Length(1);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

/// Distance between u and w in G[S + {u, w}].
inline Length oracle_pair_distance(const Graph& g, const std::vector<VertexId>& s, VertexId u, VertexId w) {
  std::vector<char> allowed(static_cast<std::size_t>(g.n()), 0);
  for (auto x : s) allowed[static_cast<std::size_t>(x)] = 1;
  allowed[static_cast<std::size_t>(u)] = allowed[static_cast<std::size_t>(w)] = 1;
  return fw_distances(g, allowed)[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
}

/// Second distance by deleting e0 from the pair graph and measuring again.
/// e0 is the first edge of the lexicographically first shortest u-w path.
inline Length oracle_second_distance(const Graph& g, const std::vector<VertexId>& s, VertexId u, VertexId w) {
  std::vector<char> allowed(static_cast<std::size_t>(g.n()), 0);
  for (auto x : s) allowed[static_cast<std::size_t>(x)] = 1;
  allowed[static_cast<std::size_t>(u)] = allowed[static_cast<std::size_t>(w)] = 1;
  const auto d = fw_distances(g, allowed);
  const Length target = d[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
  if (target.is_infinite()) return kInfinite;
  EdgeId e0 = -1;
  for (const auto& nb : g.neighbors(u)) {
    if (!allowed[static_cast<std::size_t>(nb.vertex)]) continue;
    // The rest of the path must avoid u, so measure from the neighbor without it.
    auto without_u = allowed;
    without_u[static_cast<std::size_t>(u)] = 0;
    const Length rest = fw_distances(g, without_u)[static_cast<std::size_t>(nb.vertex)][static_cast<std::size_t>(w)];
    if (rest + 1 == target) {
      e0 = nb.edge;
      break;
    }
  }
  return fw_distances(g, allowed, e0)[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
}

/// Every labeled simple graph on n vertices (2^(n choose 2) of them).
inline std::vector<Graph> all_labeled_graphs(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> slots;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back({slots[i].first, slots[i].second, 1});
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

inline bool graph_connected(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
  return uf_connected(g.n(), edges, std::vector<char>(static_cast<std::size_t>(g.n()), 1));
}

/// Connected labeled graphs with 1..max_n vertices.
inline std::vector<Graph> connected_graphs_up_to(VertexId max_n) {
  std::vector<Graph> out;
  for (VertexId n = 1; n <= max_n; ++n)
    for (auto& g : all_labeled_graphs(n))
      if (graph_connected(g)) out.push_back(std::move(g));
  return out;
}

/// G(n, p) graph with a fixed seed; optionally capped at `max_edges` edges.
inline Graph random_graph(std::mt19937_64& rng, VertexId n, double p, int max_edges = 1 << 30) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v, 1});
  std::shuffle(edges.begin(), edges.end(), rng);
  if (static_cast<int>(edges.size()) > max_edges) edges.resize(static_cast<std::size_t>(max_edges));
  return Graph(n, std::move(edges));
}

inline std::vector<Graph> random_corpus(std::uint64_t seed, int count, VertexId max_n, int max_edges = 1 << 30) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> order(1, max_n);
  std::uniform_real_distribution<double> density(0.2, 0.9);
  std::vector<Graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(rng, order(rng), density(rng), max_edges));
  return out;
}

inline std::string describe(const Graph& g) {
  std::string s = "n=" + std::to_string(g.n()) + " edges:";
  for (const auto& e : g.edges()) s += " " + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

}  // namespace girthscope::testing
