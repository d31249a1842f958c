#pragma once

namespace strongdim::limits {

// Size guards for the exact solvers.  Graphs above max_vertices() do not
// fit the n-by-n distance matrix model this library is built around;
// brute_force_max_vertices() caps the subset-enumeration oracle for the
// strong metric dimension.
//
// Both can be raised at process start (the CLI honours STRONGDIM_MAX_N);
// beyond the defaults runtimes grow exponentially.

constexpr int kDefaultMaxVertices = 4096;
constexpr int kDefaultBruteForceMax = 14;

int max_vertices();
int brute_force_max_vertices();

/// Raise both guards to at least `n`.  Not thread-safe; call before
/// spinning up workers.
void set_guard_override(int n);

}  // namespace strongdim::limits
