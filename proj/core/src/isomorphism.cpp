#include "strongdim/isomorphism.hpp"

#include <algorithm>
#include <vector>

namespace strongdim {

namespace {

// Assigns images for a's vertices in order; candidate images must match
// degree and be consistent with all previously mapped vertices.
bool extend(const Graph& a, const Graph& b, std::vector<int>& map,
            std::vector<bool>& used, int next) {
  const int n = a.order();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || a.degree(next) != b.degree(cand)) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev)
      if (a.adjacent(next, prev) != b.adjacent(cand, map[prev])) ok = false;
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (extend(a, b, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  const int n = a.order();
  std::vector<int> da, db;
  for (int v = 0; v < n; ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return extend(a, b, map, used, 0);
}

}  // namespace strongdim
