#pragma once

#include <optional>

#include "strongdim/ext_dist.hpp"
#include "strongdim/graph.hpp"

namespace strongdim {

/// The classical invariants of one graph.  dim_s is absent for
/// disconnected input (and for the one-vertex graph, where the defining
/// minimization has no pairs to resolve).
struct InvariantBundle {
  int n = 0;
  int alpha = 0;
  int beta = 0;
  int omega = 0;
  int varpi = 0;
  ExtDist diameter;
  std::optional<int> dim_s;
};

/// Computes every bundle field exactly.  Requires at least one vertex.
InvariantBundle compute_invariants(const Graph& g);

}  // namespace strongdim
