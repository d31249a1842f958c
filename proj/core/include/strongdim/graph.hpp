#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "strongdim/bits.hpp"
#include "strongdim/ext_dist.hpp"

namespace strongdim {

/// A set of vertex ids of one graph, kept in ascending order.
using VertexSubset = std::vector<int>;

class GraphBuilder;

/// Immutable simple undirected graph on the dense vertex set {0..n-1}.
/// Adjacency is stored as one bit row per vertex.  All operations on
/// graphs are pure functions returning new values, so graphs can be
/// shared freely across threads.
class Graph {
 public:
  Graph() = default;  // the graph on zero vertices

  int order() const { return n_; }
  int edge_count() const { return m_; }
  int words_per_row() const { return words_; }

  bool adjacent(int u, int v) const {
    return bits::test(row(u), v);
  }

  int degree(int u) const { return bits::popcount(row(u)); }

  std::span<const std::uint64_t> row(int u) const {
    return {rows_.data() + std::size_t(u) * words_, std::size_t(words_)};
  }

  template <class F>
  void for_each_neighbor(int u, F&& f) const {
    bits::for_each(row(u), std::forward<F>(f));
  }

  std::vector<int> neighbors(int u) const {
    std::vector<int> out;
    for_each_neighbor(u, [&](int v) { out.push_back(v); });
    return out;
  }

  /// Edges as pairs (u, v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// Labeled equality: same order and same edge set.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class GraphBuilder;
  int n_ = 0;
  int m_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// The one mutable entry point: accumulate edges, then build a Graph.
/// Rejects loops and out-of-range endpoints; duplicate and reversed
/// edges collapse silently.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);

  GraphBuilder& add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  int order() const { return g_.n_; }

  Graph build() { return std::move(g_); }

 private:
  Graph g_;
};

/// A graph derived from another one, with a map from its vertex ids back
/// to the parent's.  `vertex_map[new_id] == original_id`.
struct DerivedGraph {
  Graph graph;
  std::vector<int> vertex_map;
};

/// All-pairs shortest-path distances; entries between different
/// components are infinite.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  DistanceMatrix(int n, std::vector<std::int32_t> d) : n_(n), d_(std::move(d)) {}

  int order() const { return n_; }

  ExtDist at(int u, int v) const {
    std::int32_t x = d_[std::size_t(u) * n_ + v];
    return x < 0 ? ExtDist::infinite() : ExtDist::finite(x);
  }

 private:
  int n_ = 0;
  std::vector<std::int32_t> d_;  // -1 marks unreachable
};

/// Edge complement on the same vertex set.
Graph complement(const Graph& g);

/// Breadth-first distances from every vertex.
DistanceMatrix distance_matrix(const Graph& g);

/// Largest distance; infinite exactly when the graph is disconnected.
/// Throws std::invalid_argument on the zero-vertex graph.
ExtDist diameter(const Graph& g);
ExtDist diameter(const Graph& g, const DistanceMatrix& dm);

/// Whether u and v have identical closed neighborhoods.  u == v is an
/// error (std::invalid_argument).
bool true_twins(const Graph& g, int u, int v);

/// Whether G has any pair of true twins.
bool has_true_twins(const Graph& g);

/// Degree n-1 test.
bool is_universal_vertex(const Graph& g, int v);

/// Induced subgraph on the vertices of degree >= 1, with the index map
/// back to the original ids.
DerivedGraph remove_isolated(const Graph& g);

bool is_connected(const Graph& g);

/// Connected components, ordered by their smallest vertex; each
/// component's vertex list is ascending.
std::vector<std::vector<int>> components(const Graph& g);

bool has_isolated_vertex(const Graph& g);
bool is_complete(const Graph& g);

/// Edgeless on at least two vertices (the usual "empty graph" with the
/// one-vertex graph excluded as trivial).
bool is_empty_graph(const Graph& g);

bool is_nontrivial(const Graph& g);  // order >= 2

}  // namespace strongdim
