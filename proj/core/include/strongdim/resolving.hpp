#pragma once

#include <utility>
#include <vector>

#include "strongdim/graph.hpp"

namespace strongdim {

/// Whether u is maximally distant from v: no neighbor of u is farther
/// from v than u is.  Distances compare in the ExtDist order, so pairs
/// in different components qualify.  u == v is an error.
bool is_maximally_distant(const Graph& g, const DistanceMatrix& dm, int u, int v);
bool is_maximally_distant(const Graph& g, int u, int v);

/// All unordered pairs that are maximally distant both ways.
std::vector<std::pair<int, int>> mmd_pairs(const Graph& g);

/// Vertices appearing in at least one mutually-maximally-distant pair.
VertexSubset boundary(const Graph& g);

/// Graph on the boundary whose edges are the MMD pairs; the vertex map
/// leads back to the original ids.
DerivedGraph strong_resolving_graph(const Graph& g);

/// Same construction restricted to MMD pairs that are not true twins.
/// Always a subgraph of the strong resolving graph; for graphs where no
/// pair qualifies (complete graphs in particular) the result has an
/// empty vertex set.
DerivedGraph tf_strong_resolving_graph(const Graph& g);

/// Graph on the same vertex set joining u, v whenever d(u, v) >= 2
/// (infinity included) or u, v are true twins.
Graph star_closure(const Graph& g);

}  // namespace strongdim
