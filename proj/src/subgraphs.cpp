#include "rainbow/subgraphs.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/turan.hpp"

namespace rainbow {

namespace {

// Below this order the OpenMP fork/join costs more than the scan.
constexpr int kParallelThreshold = 128;

inline bool distinct3(int x, int y, int z) { return x != y && y != z && x != z; }

inline std::uint64_t above(Vertex v) {
  return v >= 63 ? 0 : (~std::uint64_t{0} << (v + 1));
}

// Rainbow triangles with smallest vertex u.
std::int64_t triangles_at(const EdgeColoredGraph& g, Vertex u, std::vector<Triangle>* out) {
  std::int64_t count = 0;
  if (g.has_masks()) {
    const std::uint64_t nu = g.neighbor_mask(u) & above(u);
    for (std::uint64_t a = nu; a; a &= a - 1) {
      const Vertex v = std::countr_zero(a);
      const int cuv = g.color_index(u, v);
      for (std::uint64_t b = nu & g.neighbor_mask(v) & above(v); b; b &= b - 1) {
        const Vertex w = std::countr_zero(b);
        if (distinct3(cuv, g.color_index(u, w), g.color_index(v, w))) {
          ++count;
          if (out) out->push_back({u, v, w});
        }
      }
    }
    return count;
  }
  // Sorted-row merge for graphs beyond a single machine word.
  const auto row_u = g.neighbors(u);
  for (std::size_t x = 0; x < row_u.size(); ++x) {
    const Vertex v = row_u[x].vertex;
    if (v <= u) continue;
    const auto row_v = g.neighbors(v);
    std::size_t i = x + 1, j = 0;
    while (i < row_u.size() && j < row_v.size()) {
      if (row_u[i].vertex < row_v[j].vertex) {
        ++i;
      } else if (row_v[j].vertex < row_u[i].vertex) {
        ++j;
      } else {
        if (distinct3(row_u[x].color, row_u[i].color, row_v[j].color)) {
          ++count;
          if (out) out->push_back({u, v, row_u[i].vertex});
        }
        ++i;
        ++j;
      }
    }
  }
  return count;
}

void check_clique_args(const EdgeColoredGraph& g, int k) {
  if (k < 3) throw PreconditionError("rainbow clique size must be at least 3");
  if (!g.has_masks())
    throw PreconditionError("clique enumeration supports at most " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
}

class CliqueSearch {
 public:
  CliqueSearch(const EdgeColoredGraph& g, int k, std::optional<std::size_t> limit, bool keep)
      : g_(g), k_(k), limit_(limit), keep_(keep), used_(static_cast<std::size_t>(g.c()), 0) {
    current_.reserve(static_cast<std::size_t>(k));
  }

  void run() {
    if (k_ > g_.n() || (limit_ && *limit_ == 0)) return;
    const std::uint64_t all = g_.n() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g_.n()) - 1);
    extend(all);
  }

  std::int64_t found() const { return found_; }
  std::vector<Clique>& cliques() { return cliques_; }

 private:
  bool done() const { return limit_ && static_cast<std::size_t>(found_) >= *limit_; }

  void extend(std::uint64_t candidates) {
    const int need = k_ - static_cast<int>(current_.size());
    if (need == 0) {
      ++found_;
      if (keep_) cliques_.push_back(current_);
      return;
    }
    while (candidates && !done()) {
      if (std::popcount(candidates) < need) return;
      const Vertex v = std::countr_zero(candidates);
      candidates &= candidates - 1;

      // New edges must avoid used colors and each other.
      std::size_t added = 0;
      bool ok = true;
      for (Vertex w : current_) {
        const int col = g_.color_index(v, w);
        auto& mark = used_[static_cast<std::size_t>(col)];
        if (mark) {
          ok = false;
          break;
        }
        mark = 1;
        pending_.push_back(col);
        ++added;
      }
      if (ok) {
        current_.push_back(v);
        extend(candidates & g_.neighbor_mask(v));
        current_.pop_back();
      }
      for (std::size_t i = 0; i < added; ++i) {
        used_[static_cast<std::size_t>(pending_.back())] = 0;
        pending_.pop_back();
      }
    }
  }

  const EdgeColoredGraph& g_;
  int k_;
  std::optional<std::size_t> limit_;
  bool keep_;
  std::vector<unsigned char> used_;
  std::vector<int> pending_;
  Clique current_;
  std::vector<Clique> cliques_;
  std::int64_t found_ = 0;
};

}  // namespace

bool is_rainbow_triangle(const EdgeColoredGraph& g, Vertex a, Vertex b, Vertex c) {
  const int x = g.color_index(a, b), y = g.color_index(a, c), z = g.color_index(b, c);
  return x >= 0 && y >= 0 && z >= 0 && distinct3(x, y, z);
}

std::int64_t count_rainbow_triangles(const EdgeColoredGraph& g) {
  std::int64_t total = 0;
  const int n = g.n();
#pragma omp parallel for reduction(+ : total) schedule(dynamic, 8) if (n >= kParallelThreshold)
  for (Vertex u = 0; u < n; ++u) total += triangles_at(g, u, nullptr);
  return total;
}

std::int64_t count_rainbow_triangles_serial(const EdgeColoredGraph& g) {
  std::int64_t total = 0;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c = b + 1; c < g.n(); ++c)
        if (is_rainbow_triangle(g, a, b, c)) ++total;
    }
  return total;
}

std::vector<Triangle> list_rainbow_triangles(const EdgeColoredGraph& g) {
  std::vector<Triangle> out;
  // Both scan paths emit (u, v, w) with u, then v, then w ascending.
  for (Vertex u = 0; u < g.n(); ++u) triangles_at(g, u, &out);
  return out;
}

std::vector<Clique> enumerate_rainbow_cliques(const EdgeColoredGraph& g, int k,
                                              std::optional<std::size_t> limit) {
  check_clique_args(g, k);
  CliqueSearch search(g, k, limit, true);
  search.run();
  return std::move(search.cliques());
}

std::int64_t count_rainbow_cliques(const EdgeColoredGraph& g, int k,
                                   std::optional<std::size_t> limit) {
  check_clique_args(g, k);
  CliqueSearch search(g, k, limit, false);
  search.run();
  return search.found();
}

bool has_rainbow_clique(const EdgeColoredGraph& g, int k) { return count_rainbow_cliques(g, k, 1) > 0; }

std::int64_t guaranteed_triangles_mc(std::int64_t n, std::int64_t m, std::int64_t c) {
  if (n < 0 || m < 0 || m > choose2(n) || c < 0 || c > m)
    throw PreconditionError("guaranteed_triangles_mc requires 0 <= c <= m <= C(n,2)");
  if (n == 0) return 0;  // C(1,2) = 0 would otherwise promise a triangle on no vertices
  return std::max<std::int64_t>(0, m + c - triangle_threshold(n) + 1);
}

std::int64_t guaranteed_triangles_colordeg(std::int64_t n, std::int64_t sum_color_degree) {
  if (n < 0 || sum_color_degree < 0 || sum_color_degree > n * (n - 1))
    throw PreconditionError("guaranteed_triangles_colordeg requires 0 <= sum <= n(n-1)");
  if (n == 0) return 0;
  return std::max<std::int64_t>(0, sum_color_degree - triangle_threshold(n) + 1);
}

std::int64_t clique_threshold(std::int64_t n, int k) {
  if (k < 4 || n < k)
    throw PreconditionError("rainbow K_k threshold requires n >= k >= 4 (got n = " +
                            std::to_string(n) + ", k = " + std::to_string(k) + ")");
  return choose2(n) + turan_number(static_cast<int>(n), k - 2) + 2;
}

std::int64_t guaranteed_cliques_mc(std::int64_t n, int k, std::int64_t m, std::int64_t c) {
  const std::int64_t excess = m + c - (clique_threshold(n, k) - 2);
  return excess <= 0 ? 0 : excess / 2;
}

}  // namespace rainbow
