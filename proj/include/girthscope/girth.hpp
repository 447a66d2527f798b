#pragma once

#include "girthscope/graph.hpp"
#include "girthscope/length.hpp"

namespace girthscope {

/// Shortest cycle length by edge count; infinite for forests.
/// Breadth-first search from every root, O(nm).
Length girth_unweighted(const Graph& g);

/// Minimum total edge weight over all cycles; infinite for forests.
/// Floyd-Warshall with the minimum-cycle check before each relaxation round, O(n^3).
Length girth_weighted(const Graph& g);

/// girth_weighted for weighted graphs, girth_unweighted otherwise.
Length girth(const Graph& g);

/// Distance between u and w inside G[S + {u, w}]. `u` may belong to S.
/// Requires u != w.
Length pair_distance(const Graph& g, const VertexSet& s, VertexId u, VertexId w);

enum class TieBreak { kAscending, kDescending };

/// Distance between u and w in G[S + {u, w}] with e0 removed, where e0 is the
/// first edge (at u) of a shortest u-w path. Among several shortest first
/// edges the lowest (or, with kDescending, highest) neighbor id is removed;
/// the value does not depend on that choice.
/// Requires u != w and u, w outside S (ContractError otherwise).
Length second_distance(const Graph& g, const VertexSet& s, VertexId u, VertexId w, TieBreak tie = TieBreak::kAscending);

}  // namespace girthscope
