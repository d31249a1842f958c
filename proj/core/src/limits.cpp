#include "strongdim/limits.hpp"

#include <algorithm>

namespace strongdim::limits {

namespace {
int g_max_vertices = kDefaultMaxVertices;
int g_brute_force_max = kDefaultBruteForceMax;
}  // namespace

int max_vertices() { return g_max_vertices; }
int brute_force_max_vertices() { return g_brute_force_max; }

void set_guard_override(int n) {
  g_max_vertices = std::max(kDefaultMaxVertices, n);
  g_brute_force_max = std::max(kDefaultBruteForceMax, n);
}

}  // namespace strongdim::limits
