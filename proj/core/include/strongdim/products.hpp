#pragma once

#include <utility>

#include "strongdim/graph.hpp"

namespace strongdim {

/// Row-major flattening of factor coordinates.  Every product in this
/// module labels the vertex (u, v) of G x H as u * order(H) + v, so
/// product identities can be checked as labeled-graph equalities.
inline int flat_index(int u, int v, int n2) { return u * n2 + v; }
inline std::pair<int, int> unflat_index(int x, int n2) {
  return {x / n2, x % n2};
}

/// Cartesian sum (disjunctive product): (a,b) ~ (c,d) iff a~c or b~d.
Graph cartesian_sum(const Graph& g, const Graph& h);

/// Strong product: coordinates agree or are adjacent, in each factor.
Graph strong_product(const Graph& g, const Graph& h);

/// Lexicographic product: a~c, or a=c and b~d.  Not commutative.
Graph lexicographic_product(const Graph& g, const Graph& h);

/// Cartesian (box) product: one coordinate equal, the other adjacent.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Disjoint union plus all cross edges; H's vertices are shifted by
/// order(G).
Graph join(const Graph& g, const Graph& h);

}  // namespace strongdim
