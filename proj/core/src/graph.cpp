#include "strongdim/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "strongdim/limits.hpp"

namespace strongdim {

GraphBuilder::GraphBuilder(int n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  if (n > limits::max_vertices())
    throw std::invalid_argument("vertex count " + std::to_string(n) +
                                " exceeds guard of " +
                                std::to_string(limits::max_vertices()));
  g_.n_ = n;
  g_.words_ = bits::word_count(n);
  g_.rows_.assign(std::size_t(n) * g_.words_, 0);
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
    throw std::invalid_argument("edge endpoint out of range: " +
                                std::to_string(u) + " " + std::to_string(v));
  if (u == v)
    throw std::invalid_argument("loops are not allowed: " + std::to_string(u));
  if (!has_edge(u, v)) {
    std::span<std::uint64_t> ru{g_.rows_.data() + std::size_t(u) * g_.words_,
                                std::size_t(g_.words_)};
    std::span<std::uint64_t> rv{g_.rows_.data() + std::size_t(v) * g_.words_,
                                std::size_t(g_.words_)};
    bits::set(ru, v);
    bits::set(rv, u);
    ++g_.m_;
  }
  return *this;
}

bool GraphBuilder::has_edge(int u, int v) const { return g_.adjacent(u, v); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for_each_neighbor(u, [&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return b.build();
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<std::int32_t> d(std::size_t(n) * n, -1);
  std::vector<int> queue(n);
  for (int s = 0; s < n; ++s) {
    auto* ds = d.data() + std::size_t(s) * n;
    int head = 0, tail = 0;
    ds[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      g.for_each_neighbor(u, [&](int v) {
        if (ds[v] < 0) {
          ds[v] = ds[u] + 1;
          queue[tail++] = v;
        }
      });
    }
  }
  return DistanceMatrix(n, std::move(d));
}

ExtDist diameter(const Graph& g, const DistanceMatrix& dm) {
  if (g.order() == 0)
    throw std::invalid_argument("diameter is undefined on the empty vertex set");
  ExtDist best = ExtDist::finite(0);
  const int n = g.order();
  for (int u = 0; u < n && best.is_finite(); ++u)
    for (int v = u + 1; v < n; ++v) best = max(best, dm.at(u, v));
  return best;
}

ExtDist diameter(const Graph& g) { return diameter(g, distance_matrix(g)); }

bool true_twins(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("true_twins requires two distinct vertices");
  // Closed neighborhoods as rows with the self bit mixed in.
  auto ru = g.row(u), rv = g.row(v);
  const int w = g.words_per_row();
  for (int i = 0; i < w; ++i) {
    std::uint64_t a = ru[i], b = rv[i];
    if ((u >> 6) == i) a |= std::uint64_t{1} << (u & 63);
    if ((v >> 6) == i) b |= std::uint64_t{1} << (v & 63);
    if (a != b) return false;
  }
  return true;
}

bool has_true_twins(const Graph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (true_twins(g, u, v)) return true;
  return false;
}

bool is_universal_vertex(const Graph& g, int v) {
  return g.degree(v) == g.order() - 1;
}

DerivedGraph remove_isolated(const Graph& g) {
  const int n = g.order();
  std::vector<int> map;
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v)
    if (g.degree(v) > 0) {
      new_id[v] = int(map.size());
      map.push_back(v);
    }
  GraphBuilder b(int(map.size()));
  for (auto [u, v] : g.edges()) b.add_edge(new_id[u], new_id[v]);
  return {b.build(), std::move(map)};
}

std::vector<std::vector<int>> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = int(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      out[id].push_back(u);
      g.for_each_neighbor(u, [&](int v) {
        if (comp[v] < 0) {
          comp[v] = id;
          stack.push_back(v);
        }
      });
    }
  }
  for (auto& c : out) std::sort(c.begin(), c.end());
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return components(g).size() == 1;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

bool is_complete(const Graph& g) {
  const int n = g.order();
  return 2 * g.edge_count() == n * (n - 1);
}

bool is_empty_graph(const Graph& g) {
  return g.order() >= 2 && g.edge_count() == 0;
}

bool is_nontrivial(const Graph& g) { return g.order() >= 2; }

}  // namespace strongdim
