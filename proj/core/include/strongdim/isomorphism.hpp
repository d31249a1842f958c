#pragma once

#include "strongdim/graph.hpp"

namespace strongdim {

/// Backtracking isomorphism test with degree-based pruning.  Intended
/// for the small graphs this library works with, not for heavy lifting.
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace strongdim
