#pragma once

#include <optional>

#include "strongdim/graph.hpp"

namespace strongdim {

/// An exact invariant value together with a witness set attaining it.
/// Witnesses are deterministic for a given input and sorted ascending.
struct SolverResult {
  int value = 0;
  VertexSubset witness;
};

/// Exact independence number (via a maximum clique of the complement).
SolverResult independence_number(const Graph& g);

/// Exact vertex cover number, n - alpha(G); the witness is the
/// complement of the independence witness and always covers every edge.
SolverResult vertex_cover_number(const Graph& g);

/// Exact clique number by branch and bound with a greedy coloring bound.
SolverResult clique_number(const Graph& g);

/// Exact twins-free clique number: the clique number of the auxiliary
/// graph obtained by deleting every edge joining true twins.  Requires
/// at least one vertex; singletons give 1.
SolverResult twins_free_clique_number(const Graph& g);

/// Minimum number of cliques partitioning the vertex set (the chromatic
/// number of the complement), exact.
int clique_cover_number(const Graph& g);

/// Whether the vertex set partitions into alpha(G) cliques.
bool is_c_graph(const Graph& g);

/// Whether w strongly resolves u and v: one of the two betweenness
/// equalities d(w,u) = d(w,v) + d(v,u) / d(w,v) = d(w,u) + d(u,v).
bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v);

/// Whether every vertex pair is strongly resolved by some member of S.
/// Defined for connected graphs only; disconnected input is an error.
bool is_strong_metric_generator(const Graph& g, const VertexSubset& s);
bool is_strong_metric_generator(const Graph& g, const DistanceMatrix& dm,
                                const VertexSubset& s);

/// Strong metric dimension as the vertex cover number of the strong
/// resolving graph; the witness, mapped back to original vertex ids, is
/// checked to be a strong metric generator before returning.  Requires a
/// connected graph on at least two vertices.
SolverResult strong_metric_dimension(const Graph& g);

/// Definitional strong metric dimension: smallest subset, by increasing
/// cardinality, that strongly resolves every pair.  Guarded by
/// limits::brute_force_max_vertices().
int strong_metric_dimension_bruteforce(const Graph& g);

/// Whether any member of S has degree n-1.
bool contains_universal_vertex(const Graph& g, const VertexSubset& s);

/// A maximum twins-free clique; with avoid_universal set, one avoiding
/// degree-(n-1) vertices when such a set exists, otherwise nullopt.
std::optional<VertexSubset> varpi_set_search(const Graph& g, bool avoid_universal);

}  // namespace strongdim
