#include "girthscope/girth.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace girthscope {

Length girth_unweighted(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  constexpr std::uint64_t kUnseen = ~std::uint64_t{0};
  std::vector<std::uint64_t> level(n);
  std::vector<EdgeId> parent_edge(n);
  std::vector<VertexId> queue;
  queue.reserve(n);
  Length best = kInfinite;
  for (VertexId root = 0; root < g.n(); ++root) {
    std::fill(level.begin(), level.end(), kUnseen);
    level[static_cast<std::size_t>(root)] = 0;
    parent_edge[static_cast<std::size_t>(root)] = -1;
    queue.assign(1, root);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      const auto lx = level[static_cast<std::size_t>(x)];
      // Closed walks found from here on are at least 2*lx long.
      if (Length(2 * lx) >= best) break;
      for (const auto& nb : g.neighbors(x)) {
        if (nb.edge == parent_edge[static_cast<std::size_t>(x)]) continue;
        auto& ly = level[static_cast<std::size_t>(nb.vertex)];
        if (ly == kUnseen) {
          ly = lx + 1;
          parent_edge[static_cast<std::size_t>(nb.vertex)] = nb.edge;
          queue.push_back(nb.vertex);
        } else {
          best = std::min(best, Length(lx + ly + 1));
        }
      }
    }
  }
  return best;
}

Length girth_weighted(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  std::vector<Length> w(n * n, kInfinite);
  for (const auto& e : g.edges()) {
    w[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = Length(e.weight);
    w[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = Length(e.weight);
  }
  std::vector<Length> d = w;
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Length(0);
  Length best = kInfinite;
  for (std::size_t k = 0; k < n; ++k) {
    // d[i][j] only routes through vertices below k here, so i..j + j-k-i is a simple cycle.
    for (std::size_t i = 0; i < k; ++i) {
      if (w[i * n + k].is_infinite()) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (w[k * n + j].is_infinite()) continue;
        best = std::min(best, d[i * n + j] + w[i * n + k] + w[k * n + j]);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      const Length dik = d[i * n + k];
      if (dik.is_infinite()) continue;
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::min(d[i * n + j], dik + d[k * n + j]);
    }
  }
  return best;
}

Length girth(const Graph& g) { return g.weighted() ? girth_weighted(g) : girth_unweighted(g); }

namespace {

/// BFS distances from `source` restricted to vertices with allowed[v] != 0.
std::vector<Length> bfs_within(const Graph& g, const std::vector<char>& allowed, VertexId source) {
  std::vector<Length> dist(static_cast<std::size_t>(g.n()), kInfinite);
  std::deque<VertexId> queue{source};
  dist[static_cast<std::size_t>(source)] = Length(0);
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (const auto& nb : g.neighbors(x)) {
      const auto y = static_cast<std::size_t>(nb.vertex);
      if (!allowed[y] || dist[y].is_finite()) continue;
      dist[y] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push_back(nb.vertex);
    }
  }
  return dist;
}

std::vector<char> membership(const Graph& g, const VertexSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.n())) throw ValidationError("vertex set does not match graph order");
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (VertexId v = 0; v < g.n(); ++v) in[static_cast<std::size_t>(v)] = s.contains(v) ? 1 : 0;
  return in;
}

void check_vertex(const Graph& g, VertexId v) {
  if (v < 0 || v >= g.n()) throw ValidationError("vertex " + std::to_string(v) + " outside graph");
}

}  // namespace

Length pair_distance(const Graph& g, const VertexSet& s, VertexId u, VertexId w) {
  check_vertex(g, u);
  check_vertex(g, w);
  if (u == w) throw ContractError("pair_distance requires distinct endpoints");
  auto allowed = membership(g, s);
  allowed[static_cast<std::size_t>(u)] = 1;
  allowed[static_cast<std::size_t>(w)] = 1;
  return bfs_within(g, allowed, u)[static_cast<std::size_t>(w)];
}

Length second_distance(const Graph& g, const VertexSet& s, VertexId u, VertexId w, TieBreak tie) {
  check_vertex(g, u);
  check_vertex(g, w);
  if (u == w) throw ContractError("second_distance requires distinct endpoints");
  if (s.contains(u) || s.contains(w)) throw ContractError("second_distance endpoints must lie outside S");
  // Every u-w path leaves u through some neighbor y in S + {w} and then stays
  // inside G[S + {w}], so distances from w there give each first edge's best path.
  auto allowed = membership(g, s);
  allowed[static_cast<std::size_t>(w)] = 1;
  const auto from_w = bfs_within(g, allowed, w);
  std::vector<std::pair<VertexId, Length>> routes;
  for (const auto& nb : g.neighbors(u))
    if (allowed[static_cast<std::size_t>(nb.vertex)]) routes.emplace_back(nb.vertex, from_w[static_cast<std::size_t>(nb.vertex)] + 1);
  if (tie == TieBreak::kDescending) std::reverse(routes.begin(), routes.end());
  // e0: first route of minimum length in tie-break order.
  auto e0 = std::min_element(routes.begin(), routes.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  if (e0 == routes.end() || e0->second.is_infinite()) return kInfinite;
  Length best = kInfinite;
  for (auto it = routes.begin(); it != routes.end(); ++it)
    if (it != e0) best = std::min(best, it->second);
  return best;
}

}  // namespace girthscope
