#include "strongdim/resolving.hpp"

#include <stdexcept>

namespace strongdim {

bool is_maximally_distant(const Graph& g, const DistanceMatrix& dm, int u, int v) {
  if (u == v)
    throw std::invalid_argument("is_maximally_distant requires distinct vertices");
  const ExtDist duv = dm.at(u, v);
  bool ok = true;
  g.for_each_neighbor(u, [&](int w) {
    if (dm.at(v, w) > duv) ok = false;
  });
  return ok;
}

bool is_maximally_distant(const Graph& g, int u, int v) {
  return is_maximally_distant(g, distance_matrix(g), u, v);
}

namespace {

std::vector<std::pair<int, int>> mmd_pairs_impl(const Graph& g,
                                                const DistanceMatrix& dm) {
  std::vector<std::pair<int, int>> out;
  const int n = g.order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (is_maximally_distant(g, dm, u, v) && is_maximally_distant(g, dm, v, u))
        out.emplace_back(u, v);
  return out;
}

DerivedGraph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> used(n, false);
  for (auto [u, v] : pairs) used[u] = used[v] = true;
  std::vector<int> map;
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v)
    if (used[v]) {
      new_id[v] = int(map.size());
      map.push_back(v);
    }
  GraphBuilder b(int(map.size()));
  for (auto [u, v] : pairs) b.add_edge(new_id[u], new_id[v]);
  return {b.build(), std::move(map)};
}

}  // namespace

std::vector<std::pair<int, int>> mmd_pairs(const Graph& g) {
  return mmd_pairs_impl(g, distance_matrix(g));
}

VertexSubset boundary(const Graph& g) {
  const int n = g.order();
  std::vector<bool> used(n, false);
  for (auto [u, v] : mmd_pairs(g)) used[u] = used[v] = true;
  VertexSubset out;
  for (int v = 0; v < n; ++v)
    if (used[v]) out.push_back(v);
  return out;
}

DerivedGraph strong_resolving_graph(const Graph& g) {
  return graph_from_pairs(g.order(), mmd_pairs(g));
}

DerivedGraph tf_strong_resolving_graph(const Graph& g) {
  auto dm = distance_matrix(g);
  std::vector<std::pair<int, int>> pairs;
  for (auto [u, v] : mmd_pairs_impl(g, dm))
    if (!true_twins(g, u, v)) pairs.emplace_back(u, v);
  return graph_from_pairs(g.order(), pairs);
}

Graph star_closure(const Graph& g) {
  const int n = g.order();
  auto dm = distance_matrix(g);
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dm.at(u, v) >= ExtDist::finite(2) || true_twins(g, u, v))
        b.add_edge(u, v);
  return b.build();
}

}  // namespace strongdim
