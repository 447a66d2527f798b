#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "girthscope/errors.hpp"

namespace girthscope {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  Weight weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Neighbor {
  VertexId vertex;
  EdgeId edge;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// Immutable simple undirected graph.
///
/// Vertices are 0..n-1. Edges are stored with u < v and numbered in
/// lexicographic (u, v) order, so edge ids depend only on the edge set and
/// not on input order. Neighbor lists are sorted by vertex id. Unweighted
/// graphs carry weight 1 on every edge.
class Graph {
 public:
  Graph() = default;

  /// Validates and normalizes `edges` (endpoint order, id assignment).
  /// Throws ValidationError on self-loops, parallel edges, out-of-range
  /// endpoints, or weights below 1.
  Graph(VertexId n, std::vector<Edge> edges, bool weighted = false);

  static Graph from_pairs(VertexId n, std::initializer_list<std::pair<VertexId, VertexId>> pairs);

  VertexId n() const { return static_cast<VertexId>(adjacency_.size()); }
  EdgeId m() const { return static_cast<EdgeId>(edges_.size()); }
  bool weighted() const { return weighted_; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::span<const Neighbor> neighbors(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  std::size_t degree(VertexId v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  /// Edge joining u and v, if any. O(log deg(u)).
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

  /// Endpoint of `e` opposite to `v`.
  VertexId other(EdgeId e, VertexId v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

  Weight max_weight() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Edge> edges_;
  bool weighted_ = false;
};

/// Membership set over a dense id range with cached cardinality.
template <class Tag>
class IdSet {
 public:
  IdSet() = default;
  explicit IdSet(std::size_t universe) : bits_(universe, 0) {}
  IdSet(std::size_t universe, std::initializer_list<std::int32_t> ids) : IdSet(universe) {
    for (auto id : ids) insert(id);
  }
  IdSet(std::size_t universe, std::span<const std::int32_t> ids) : IdSet(universe) {
    for (auto id : ids) insert(id);
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(std::int32_t id) const {
    return id >= 0 && static_cast<std::size_t>(id) < bits_.size() && bits_[static_cast<std::size_t>(id)] != 0;
  }

  /// Returns true if `id` was newly inserted.
  bool insert(std::int32_t id) {
    check(id);
    auto& b = bits_[static_cast<std::size_t>(id)];
    if (b) return false;
    b = 1;
    ++count_;
    return true;
  }

  bool erase(std::int32_t id) {
    check(id);
    auto& b = bits_[static_cast<std::size_t>(id)];
    if (!b) return false;
    b = 0;
    --count_;
    return true;
  }

  /// Members in ascending order.
  std::vector<std::int32_t> members() const {
    std::vector<std::int32_t> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.push_back(static_cast<std::int32_t>(i));
    return out;
  }

  friend bool operator==(const IdSet&, const IdSet&) = default;

 private:
  void check(std::int32_t id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= bits_.size()) [[unlikely]]
      out_of_range(id, bits_.size());
  }
  [[noreturn]] [[gnu::noinline]] static void out_of_range(std::int32_t id, std::size_t universe) {
    throw ValidationError("id " + std::to_string(id) + " outside range [0, " + std::to_string(universe) + ")");
  }

  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

struct VertexTag {};
struct EdgeTag {};
using VertexSet = IdSet<VertexTag>;
using EdgeSet = IdSet<EdgeTag>;

/// Edge-list text: one "u v" or "u v w" per line, '#' starts a comment line,
/// blank lines ignored. A line holding a single token declares a vertex (used
/// for isolated vertices). Vertex tokens are arbitrary words, renumbered
/// 0..n-1 in order of first appearance. With `weighted` false a third column
/// is an error; with `weighted` true it is required.
Graph parse_edge_list(std::istream& in, bool weighted = false);
Graph parse_edge_list(std::string_view text, bool weighted = false);

/// DIMACS "p edge n m" / "e u v [w]" with 1-based vertex ids; 'c' lines are
/// comments. Same validation as parse_edge_list.
Graph parse_dimacs(std::istream& in, bool weighted = false);
Graph parse_dimacs(std::string_view text, bool weighted = false);

/// Inverse of parse_edge_list: parsing the result yields an identical Graph.
/// Vertex declaration lines are written first whenever edge order alone would
/// not reproduce the numbering (isolated vertices, out-of-order first use).
std::string write_edge_list(const Graph& g);

/// G[S], vertices renumbered in ascending id order of S.
Graph induced_subgraph(const Graph& g, const VertexSet& s);

/// G[E'], whose vertices are the endpoints of E', renumbered ascending.
Graph edge_subgraph(const Graph& g, const EdgeSet& e);

/// True when every pair of vertices is joined by a path. Graphs with fewer
/// than two vertices are connected.
bool is_connected(const Graph& g);

Graph make_complete(VertexId n);
Graph make_cycle(VertexId n);
Graph make_path(VertexId n);
Graph make_petersen();

/// "K7", "C5", "P3", "petersen" (case-insensitive prefix letter).
Graph make_family(std::string_view name);

}  // namespace girthscope
