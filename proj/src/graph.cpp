#include "girthscope/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace girthscope {

Graph::Graph(VertexId n, std::vector<Edge> edges, bool weighted) : adjacency_(static_cast<std::size_t>(n)), weighted_(weighted) {
  if (n < 0) throw ValidationError("negative vertex count");
  for (auto& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw ValidationError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has an endpoint outside [0, " +
                            std::to_string(n) + ")");
    if (e.u == e.v) throw ValidationError("self-loop at vertex " + std::to_string(e.u));
    if (!weighted) e.weight = 1;
    if (e.weight < 1) throw ValidationError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " has weight < 1");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw ValidationError("duplicate edge " + std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v));
  edges_ = std::move(edges);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const auto e = static_cast<EdgeId>(id);
    adjacency_[static_cast<std::size_t>(edges_[id].u)].push_back({edges_[id].v, e});
    adjacency_[static_cast<std::size_t>(edges_[id].v)].push_back({edges_[id].u, e});
  }
  for (auto& list : adjacency_)
    std::sort(list.begin(), list.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
}

Graph Graph::from_pairs(VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs) edges.push_back({u, v, 1});
  return Graph(n, std::move(edges), false);
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= n()) return std::nullopt;
  auto list = neighbors(u);
  auto it = std::lower_bound(list.begin(), list.end(), v, [](const Neighbor& a, VertexId x) { return a.vertex < x; });
  if (it != list.end() && it->vertex == v) return it->edge;
  return std::nullopt;
}

Weight Graph::max_weight() const {
  Weight w = 0;
  for (const auto& e : edges_) w = std::max(w, e.weight);
  return w;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

template <class Int>
bool parse_int(std::string_view word, Int& out) {
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), out);
  return ec == std::errc() && ptr == word.data() + word.size();
}

Weight parse_weight(std::string_view word, std::size_t line) {
  long long w = 0;
  if (!parse_int(word, w)) throw ParseError(line, "weight '" + std::string(word) + "' is not an integer");
  if (w < 1) throw ValidationError("line " + std::to_string(line) + ": weight " + std::to_string(w) + " is below 1");
  if (w > static_cast<long long>(std::numeric_limits<Weight>::max()))
    throw ValidationError("line " + std::to_string(line) + ": weight too large");
  return static_cast<Weight>(w);
}

}  // namespace

Graph parse_edge_list(std::istream& in, bool weighted) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<Edge> edges;
  auto intern = [&](std::string_view word) {
    auto [it, fresh] = ids.try_emplace(std::string(word), static_cast<VertexId>(ids.size()));
    return it->second;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;
    if (words.size() == 1) {
      intern(words[0]);
      continue;
    }
    const std::size_t expected = weighted ? 3 : 2;
    if (words.size() != expected)
      throw ParseError(lineno, "expected " + std::string(weighted ? "\"u v w\"" : "\"u v\"") + ", got " +
                                   std::to_string(words.size()) + " fields");
    if (words[0] == words[1]) throw ValidationError("line " + std::to_string(lineno) + ": self-loop at " + std::string(words[0]));
    Edge e{intern(words[0]), intern(words[1]), 1};
    if (weighted) e.weight = parse_weight(words[2], lineno);
    edges.push_back(e);
  }
  return Graph(static_cast<VertexId>(ids.size()), std::move(edges), weighted);
}

Graph parse_edge_list(std::string_view text, bool weighted) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in, weighted);
}

Graph parse_dimacs(std::istream& in, bool weighted) {
  std::string line;
  std::size_t lineno = 0;
  long long n = -1;
  long long m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "p") {
      if (n >= 0) throw ParseError(lineno, "second problem line");
      if (words.size() != 4 || !parse_int(words[2], n) || !parse_int(words[3], m) || n < 0 || m < 0)
        throw ParseError(lineno, "expected \"p edge n m\"");
      continue;
    }
    if (words[0] != "e") throw ParseError(lineno, "unknown line type '" + std::string(words[0]) + "'");
    if (n < 0) throw ParseError(lineno, "edge before problem line");
    if (words.size() != (weighted ? 4u : 3u)) throw ParseError(lineno, weighted ? "expected \"e u v w\"" : "expected \"e u v\"");
    long long u = 0;
    long long v = 0;
    if (!parse_int(words[1], u) || !parse_int(words[2], v)) throw ParseError(lineno, "vertex ids must be integers");
    if (u < 1 || u > n || v < 1 || v > n) throw ValidationError("line " + std::to_string(lineno) + ": vertex id outside 1.." + std::to_string(n));
    if (u == v) throw ValidationError("line " + std::to_string(lineno) + ": self-loop at " + std::to_string(u));
    Edge e{static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1), 1};
    if (weighted) e.weight = parse_weight(words[3], lineno);
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(lineno, "missing problem line");
  if (static_cast<long long>(edges.size()) != m)
    throw ParseError(lineno, "problem line declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Graph(static_cast<VertexId>(n), std::move(edges), weighted);
}

Graph parse_dimacs(std::string_view text, bool weighted) {
  std::istringstream in{std::string(text)};
  return parse_dimacs(in, weighted);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  // Edges are written in id order; check whether first appearance already
  // numbers the vertices 0..n-1.
  VertexId next = 0;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  bool in_order = true;
  for (const auto& e : g.edges()) {
    for (VertexId x : {e.u, e.v}) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      seen[static_cast<std::size_t>(x)] = 1;
      in_order = in_order && x == next;
      ++next;
    }
  }
  if (!in_order || next != g.n())
    for (VertexId v = 0; v < g.n(); ++v) out << v << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (g.weighted()) out << ' ' << e.weight;
    out << '\n';
  }
  return out.str();
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != static_cast<std::size_t>(g.n()))
    throw ValidationError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " + std::to_string(g.n()));
  std::vector<VertexId> local(static_cast<std::size_t>(g.n()), -1);
  VertexId count = 0;
  for (VertexId v = 0; v < g.n(); ++v)
    if (s.contains(v)) local[static_cast<std::size_t>(v)] = count++;
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v))
      edges.push_back({local[static_cast<std::size_t>(e.u)], local[static_cast<std::size_t>(e.v)], e.weight});
  return Graph(count, std::move(edges), g.weighted());
}

Graph edge_subgraph(const Graph& g, const EdgeSet& es) {
  if (es.universe() != static_cast<std::size_t>(g.m()))
    throw ValidationError("edge set universe " + std::to_string(es.universe()) + " does not match edge count " + std::to_string(g.m()));
  std::vector<VertexId> local(static_cast<std::size_t>(g.n()), -1);
  for (EdgeId e = 0; e < g.m(); ++e)
    if (es.contains(e)) local[static_cast<std::size_t>(g.edge(e).u)] = local[static_cast<std::size_t>(g.edge(e).v)] = 0;
  VertexId count = 0;
  for (auto& x : local)
    if (x == 0) x = count++;
  std::vector<Edge> edges;
  edges.reserve(es.size());
  for (EdgeId e = 0; e < g.m(); ++e)
    if (es.contains(e)) {
      const auto& ed = g.edge(e);
      edges.push_back({local[static_cast<std::size_t>(ed.u)], local[static_cast<std::size_t>(ed.v)], ed.weight});
    }
  return Graph(count, std::move(edges), g.weighted());
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  VertexId reached = 1;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const auto& nb : g.neighbors(x))
      if (!seen[static_cast<std::size_t>(nb.vertex)]) {
        seen[static_cast<std::size_t>(nb.vertex)] = 1;
        ++reached;
        stack.push_back(nb.vertex);
      }
  }
  return reached == g.n();
}

Graph make_complete(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  return Graph(n, std::move(edges));
}

Graph make_cycle(VertexId n) {
  if (n < 3) throw ValidationError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n, 1});
  return Graph(n, std::move(edges));
}

Graph make_path(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1});
  return Graph(n, std::move(edges));
}

Graph make_petersen() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, 1});
    edges.push_back({i, i + 5, 1});
    edges.push_back({5 + i, 5 + (i + 2) % 5, 1});
  }
  return Graph(10, std::move(edges));
}

Graph make_family(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "petersen") return make_petersen();
  VertexId n = 0;
  if (lower.size() < 2 || !parse_int(std::string_view(lower).substr(1), n) || n < 0)
    throw ValidationError("unknown graph family '" + std::string(name) + "' (expected Kn, Cn, Pn or petersen)");
  switch (lower[0]) {
    case 'k': return make_complete(n);
    case 'c': return make_cycle(n);
    case 'p': return make_path(n);
    default: throw ValidationError("unknown graph family '" + std::string(name) + "' (expected Kn, Cn, Pn or petersen)");
  }
}

}  // namespace girthscope
