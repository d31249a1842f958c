#include "strongdim/solvers.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "strongdim/limits.hpp"
#include "strongdim/resolving.hpp"

namespace strongdim {

namespace {

using Words = std::vector<std::uint64_t>;

// Tomita-style exact maximum clique.  Vertices are relabeled by
// (degree desc, id asc) once; the greedy coloring of the candidate set
// bounds the search and candidates expand in reverse color order.
// Everything is deterministic, so witnesses reproduce across runs.
class MaxCliqueSolver {
 public:
  explicit MaxCliqueSolver(const Graph& g)
      : n_(g.order()), words_(bits::word_count(std::max(n_, 1))) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::vector<int> deg(n_);
    for (int v = 0; v < n_; ++v) deg[v] = g.degree(v);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
    });
    std::vector<int> internal(n_);
    for (int i = 0; i < n_; ++i) internal[order_[i]] = i;
    adj_.assign(std::size_t(n_) * words_, 0);
    for (auto [u, v] : g.edges()) {
      set_bit(row(internal[u]), internal[v]);
      set_bit(row(internal[v]), internal[u]);
    }
    stack_.resize(std::size_t(n_ + 1) * words_);
    current_.resize(n_);
  }

  SolverResult solve() {
    best_ = 0;
    best_set_.clear();
    if (n_ == 0) return {0, {}};
    std::fill(stack_.begin(), stack_.end(), 0);
    std::span<std::uint64_t> root{stack_.data(), std::size_t(words_)};
    for (int v = 0; v < n_; ++v) set_bit(root, v);
    expand(stack_.data(), 0);
    VertexSubset witness;
    witness.reserve(best_set_.size());
    for (int v : best_set_) witness.push_back(order_[v]);
    std::sort(witness.begin(), witness.end());
    return {best_, std::move(witness)};
  }

 private:
  std::span<std::uint64_t> row(int v) {
    return {adj_.data() + std::size_t(v) * words_, std::size_t(words_)};
  }
  std::span<const std::uint64_t> row(int v) const {
    return {adj_.data() + std::size_t(v) * words_, std::size_t(words_)};
  }
  static void set_bit(std::span<std::uint64_t> w, int i) { bits::set(w, i); }

  // Greedy coloring of P in increasing internal order per color class.
  // Output vertices are grouped by color, colors nondecreasing.
  void color_sort(const std::uint64_t* P, std::vector<int>& verts,
                  std::vector<int>& colors) {
    Words q(P, P + words_), c(words_);
    int color = 0;
    while (bits::any(q)) {
      ++color;
      c.assign(q.begin(), q.end());
      while (true) {
        int v = bits::first(c);
        if (v < 0) break;
        bits::reset(c, v);
        bits::reset(q, v);
        auto rv = row(v);
        for (int i = 0; i < words_; ++i) c[i] &= ~rv[i];
        verts.push_back(v);
        colors.push_back(color);
      }
    }
  }

  void expand(std::uint64_t* P, int depth) {
    std::vector<int> verts, colors;
    color_sort(P, verts, colors);
    std::uint64_t* child = P + words_;
    for (int i = int(verts.size()) - 1; i >= 0; --i) {
      if (depth + colors[i] <= best_) return;
      const int v = verts[i];
      current_[depth] = v;
      bits::reset({P, std::size_t(words_)}, v);
      auto rv = row(v);
      bool nonempty = false;
      for (int w = 0; w < words_; ++w) {
        child[w] = P[w] & rv[w];
        nonempty |= child[w] != 0;
      }
      if (!nonempty) {
        if (depth + 1 > best_) {
          best_ = depth + 1;
          best_set_.assign(current_.begin(), current_.begin() + depth + 1);
        }
      } else {
        expand(child, depth + 1);
      }
    }
  }

  int n_, words_;
  std::vector<int> order_;
  Words adj_;
  Words stack_;  // one candidate set per recursion level
  std::vector<int> current_;
  int best_ = 0;
  std::vector<int> best_set_;
};

Graph twin_edge_deleted(const Graph& g) {
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges())
    if (!true_twins(g, u, v)) b.add_edge(u, v);
  return b.build();
}

}  // namespace

SolverResult clique_number(const Graph& g) {
  return MaxCliqueSolver(g).solve();
}

SolverResult independence_number(const Graph& g) {
  return clique_number(complement(g));
}

SolverResult vertex_cover_number(const Graph& g) {
  SolverResult alpha = independence_number(g);
  std::vector<bool> in(g.order(), false);
  for (int v : alpha.witness) in[v] = true;
  VertexSubset cover;
  cover.reserve(g.order() - alpha.value);
  for (int v = 0; v < g.order(); ++v)
    if (!in[v]) cover.push_back(v);
  return {g.order() - alpha.value, std::move(cover)};
}

SolverResult twins_free_clique_number(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument(
        "twins_free_clique_number requires at least one vertex");
  return clique_number(twin_edge_deleted(g));
}

namespace {

// Exact graph coloring by backtracking: vertices in degree-descending
// order, each tried on the used colors plus at most one fresh color.
class ColoringSolver {
 public:
  explicit ColoringSolver(const Graph& g) : g_(g), n_(g.order()) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    color_.assign(n_, -1);
  }

  int solve() {
    if (n_ == 0) return 0;
    lower_ = clique_number(g_).value;
    best_ = greedy_bound();
    if (best_ > lower_) recurse(0, 0);
    return best_;
  }

 private:
  int greedy_bound() {
    std::vector<int> c(n_, -1);
    int used = 0;
    for (int v : order_) {
      std::vector<bool> busy(used + 1, false);
      g_.for_each_neighbor(v, [&](int w) {
        if (c[w] >= 0 && c[w] <= used) busy[c[w]] = true;
      });
      int k = 0;
      while (k < used && busy[k]) ++k;
      c[v] = k;
      used = std::max(used, k + 1);
    }
    return used;
  }

  void recurse(int idx, int used) {
    if (used >= best_) return;
    if (idx == n_) {
      best_ = used;
      return;
    }
    const int v = order_[idx];
    const int limit = std::min(used + 1, best_ - 1);
    for (int c = 0; c < limit; ++c) {
      bool ok = true;
      g_.for_each_neighbor(v, [&](int w) {
        if (color_[w] == c) ok = false;
      });
      if (!ok) continue;
      color_[v] = c;
      recurse(idx + 1, std::max(used, c + 1));
      color_[v] = -1;
      if (best_ == lower_) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> order_;
  std::vector<int> color_;
  int best_ = 0;
  int lower_ = 0;
};

}  // namespace

int clique_cover_number(const Graph& g) {
  return ColoringSolver(complement(g)).solve();
}

bool is_c_graph(const Graph& g) {
  return clique_cover_number(g) == independence_number(g).value;
}

bool strongly_resolves(const DistanceMatrix& dm, int w, int u, int v) {
  const ExtDist wu = dm.at(w, u), wv = dm.at(w, v), uv = dm.at(u, v);
  if (wu.is_infinite() || wv.is_infinite() || uv.is_infinite()) return false;
  return wu.value() == wv.value() + uv.value() ||
         wv.value() == wu.value() + uv.value();
}

bool is_strong_metric_generator(const Graph& g, const DistanceMatrix& dm,
                                const VertexSubset& s) {
  const int n = g.order();
  for (int v : s)
    if (v < 0 || v >= n)
      throw std::invalid_argument("generator vertex out of range: " +
                                  std::to_string(v));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (dm.at(u, v).is_infinite())
        throw std::invalid_argument(
            "strong metric generators are defined for connected graphs");
      bool resolved = false;
      for (int w : s)
        if (strongly_resolves(dm, w, u, v)) {
          resolved = true;
          break;
        }
      if (!resolved) return false;
    }
  return true;
}

bool is_strong_metric_generator(const Graph& g, const VertexSubset& s) {
  if (!is_connected(g))
    throw std::invalid_argument(
        "strong metric generators are defined for connected graphs");
  return is_strong_metric_generator(g, distance_matrix(g), s);
}

SolverResult strong_metric_dimension(const Graph& g) {
  if (g.order() <= 1)
    throw std::invalid_argument(
        "strong metric dimension requires at least two vertices");
  auto dm = distance_matrix(g);
  for (int v = 1; v < g.order(); ++v)
    if (dm.at(0, v).is_infinite())
      throw std::invalid_argument(
          "strong metric dimension is defined for connected graphs");
  DerivedGraph sr = strong_resolving_graph(g);
  SolverResult cover = vertex_cover_number(sr.graph);
  VertexSubset witness;
  witness.reserve(cover.witness.size());
  for (int v : cover.witness) witness.push_back(sr.vertex_map[v]);
  std::sort(witness.begin(), witness.end());
  if (!is_strong_metric_generator(g, dm, witness))
    throw std::logic_error(
        "internal error: cover of the strong resolving graph does not "
        "strongly resolve all pairs");
  return {cover.value, std::move(witness)};
}

int strong_metric_dimension_bruteforce(const Graph& g) {
  const int n = g.order();
  if (n <= 1)
    throw std::invalid_argument(
        "strong metric dimension requires at least two vertices");
  const int guard = std::min(limits::brute_force_max_vertices(), 63);
  if (n > guard)
    throw std::invalid_argument(
        "brute-force strong metric dimension is guarded at n <= " +
        std::to_string(guard));
  auto dm = distance_matrix(g);
  for (int v = 1; v < n; ++v)
    if (dm.at(0, v).is_infinite())
      throw std::invalid_argument(
          "strong metric dimension is defined for connected graphs");

  // For every pair, the mask of vertices resolving it; a generator is a
  // subset hitting all masks.
  std::vector<std::uint64_t> pair_masks;
  pair_masks.reserve(std::size_t(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t mask = 0;
      for (int w = 0; w < n; ++w)
        if (strongly_resolves(dm, w, u, v)) mask |= std::uint64_t{1} << w;
      pair_masks.push_back(mask);
    }

  int best = n;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = 1; s < limit; ++s) {
    if (std::popcount(s) >= best) continue;
    bool ok = true;
    for (std::uint64_t m : pair_masks)
      if (!(s & m)) {
        ok = false;
        break;
      }
    if (ok) best = std::popcount(s);
  }
  return best;
}

bool contains_universal_vertex(const Graph& g, const VertexSubset& s) {
  for (int v : s)
    if (is_universal_vertex(g, v)) return true;
  return false;
}

std::optional<VertexSubset> varpi_set_search(const Graph& g,
                                             bool avoid_universal) {
  SolverResult varpi = twins_free_clique_number(g);
  if (!avoid_universal) return varpi.witness;
  if (!contains_universal_vertex(g, varpi.witness)) return varpi.witness;

  // Restrict the twin-edge-deleted graph to non-universal vertices; a
  // qualifying set exists iff a maximum clique there still reaches varpi.
  const int n = g.order();
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (!is_universal_vertex(g, v)) keep.push_back(v);
  std::vector<int> new_id(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = int(i);
  Graph aux = twin_edge_deleted(g);
  GraphBuilder b(int(keep.size()));
  for (auto [u, v] : aux.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0) b.add_edge(new_id[u], new_id[v]);
  SolverResult restricted = clique_number(b.build());
  if (restricted.value < varpi.value) return std::nullopt;
  VertexSubset out;
  out.reserve(restricted.witness.size());
  for (int v : restricted.witness) out.push_back(keep[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace strongdim
