#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Vertex triple with a < b < c.
struct Triangle {
  Vertex a;
  Vertex b;
  Vertex c;

  friend bool operator==(const Triangle&, const Triangle&) = default;
  friend auto operator<=>(const Triangle&, const Triangle&) = default;
};

/// Ascending vertex set of a rainbow K_k.
using Clique = std::vector<Vertex>;

bool is_rainbow_triangle(const EdgeColoredGraph& g, Vertex a, Vertex b, Vertex c);

/// Number of rainbow triangles. Parallel over the outer vertex for large graphs.
std::int64_t count_rainbow_triangles(const EdgeColoredGraph& g);
/// Plain scan over every vertex triple; the reference the parallel kernel is tested against.
std::int64_t count_rainbow_triangles_serial(const EdgeColoredGraph& g);
/// Lexicographically sorted.
std::vector<Triangle> list_rainbow_triangles(const EdgeColoredGraph& g);

/// Rainbow K_k's in lexicographic order, stopping after `limit` results.
///
/// Backtracking: a partial clique is extended only by higher-indexed common
/// neighbors whose connecting edges avoid every color already used. Branches that
/// cannot reach k vertices are cut. Requires k >= 3 and n <= kMaxEnumerationVertices;
/// k > n yields no cliques.
std::vector<Clique> enumerate_rainbow_cliques(const EdgeColoredGraph& g, int k,
                                              std::optional<std::size_t> limit = std::nullopt);
std::int64_t count_rainbow_cliques(const EdgeColoredGraph& g, int k,
                                   std::optional<std::size_t> limit = std::nullopt);
bool has_rainbow_clique(const EdgeColoredGraph& g, int k);

// Closed-form lower bounds. All return 0 below threshold, never a negative count.

/// Rainbow triangles forced by m + c >= C(n+1,2) + k - 1.
std::int64_t guaranteed_triangles_mc(std::int64_t n, std::int64_t m, std::int64_t c);
/// Rainbow triangles forced by sum of color degrees >= C(n+1,2) + k - 1.
std::int64_t guaranteed_triangles_colordeg(std::int64_t n, std::int64_t sum_color_degree);
/// Rainbow K_k's forced by m + c >= C(n,2) + t(n,k-2) + 2*l.
std::int64_t guaranteed_cliques_mc(std::int64_t n, int k, std::int64_t m, std::int64_t c);

/// C(n+1,2): the rainbow-triangle threshold for m + c and for the color-degree sum.
inline constexpr std::int64_t triangle_threshold(std::int64_t n) noexcept { return choose2(n + 1); }
/// C(n,2) + t(n,k-2) + 2: the rainbow-K_k threshold for m + c.
std::int64_t clique_threshold(std::int64_t n, int k);

}  // namespace rainbow
