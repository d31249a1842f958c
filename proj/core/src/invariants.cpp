#include "strongdim/invariants.hpp"

#include <stdexcept>

#include "strongdim/solvers.hpp"

namespace strongdim {

InvariantBundle compute_invariants(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("invariants are undefined on the empty vertex set");
  InvariantBundle b;
  b.n = g.order();
  b.alpha = independence_number(g).value;
  b.beta = vertex_cover_number(g).value;
  b.omega = clique_number(g).value;
  b.varpi = twins_free_clique_number(g).value;
  b.diameter = diameter(g);
  if (b.diameter.is_finite() && g.order() >= 2)
    b.dim_s = strong_metric_dimension(g).value;
  if (b.alpha + b.beta != b.n || b.omega < b.varpi || b.varpi < 1)
    throw std::logic_error("internal error: invariant bundle inconsistent");
  return b;
}

}  // namespace strongdim
