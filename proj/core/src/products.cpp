#include "strongdim/products.hpp"

#include <stdexcept>
#include <string>

#include "strongdim/limits.hpp"

namespace strongdim {

namespace {

void check_factors(const Graph& g, const Graph& h, const char* name) {
  if (g.order() == 0 || h.order() == 0)
    throw std::invalid_argument(std::string(name) +
                                " requires factors with at least one vertex");
  long total = long(g.order()) * h.order();
  if (total > limits::max_vertices())
    throw std::invalid_argument(std::string(name) + " result order " +
                                std::to_string(total) + " exceeds guard of " +
                                std::to_string(limits::max_vertices()));
}

template <class Adjacency>
Graph build_product(const Graph& g, const Graph& h, Adjacency adj) {
  const int n1 = g.order(), n2 = h.order();
  GraphBuilder b(n1 * n2);
  for (int a = 0; a < n1; ++a)
    for (int bb = 0; bb < n2; ++bb) {
      const int x = flat_index(a, bb, n2);
      for (int c = a; c < n1; ++c)
        for (int d = (c == a ? bb + 1 : 0); d < n2; ++d)
          if (adj(a, bb, c, d)) b.add_edge(x, flat_index(c, d, n2));
    }
  return b.build();
}

}  // namespace

Graph cartesian_sum(const Graph& g, const Graph& h) {
  check_factors(g, h, "cartesian_sum");
  return build_product(g, h, [&](int a, int b, int c, int d) {
    return g.adjacent(a, c) || h.adjacent(b, d);
  });
}

Graph strong_product(const Graph& g, const Graph& h) {
  check_factors(g, h, "strong_product");
  return build_product(g, h, [&](int a, int b, int c, int d) {
    return (a == c && h.adjacent(b, d)) || (b == d && g.adjacent(a, c)) ||
           (g.adjacent(a, c) && h.adjacent(b, d));
  });
}

Graph lexicographic_product(const Graph& g, const Graph& h) {
  check_factors(g, h, "lexicographic_product");
  return build_product(g, h, [&](int a, int b, int c, int d) {
    return g.adjacent(a, c) || (a == c && h.adjacent(b, d));
  });
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  check_factors(g, h, "cartesian_product");
  return build_product(g, h, [&](int a, int b, int c, int d) {
    return (a == c && h.adjacent(b, d)) || (b == d && g.adjacent(a, c));
  });
}

Graph join(const Graph& g, const Graph& h) {
  const int n1 = g.order(), n2 = h.order();
  if (long(n1) + n2 > limits::max_vertices())
    throw std::invalid_argument("join result exceeds vertex guard");
  GraphBuilder b(n1 + n2);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) b.add_edge(u, n1 + v);
  return b.build();
}

}  // namespace strongdim
