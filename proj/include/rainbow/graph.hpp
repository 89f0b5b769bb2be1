#pragma once

#include <compare>
#include <initializer_list>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rainbow {

using Vertex = int;

/// Opaque color label. Only equality (and an arbitrary total order) carries meaning.
enum class ColorId : std::int64_t {};

constexpr std::int64_t color_value(ColorId c) noexcept { return static_cast<std::int64_t>(c); }

struct ColoredEdge {
  Vertex u;
  Vertex v;
  ColorId color;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Neighbor entry of an adjacency row; `color` indexes EdgeColoredGraph::palette().
struct Neighbor {
  Vertex vertex;
  int color;
};

// Bitset paths (clique enumeration, coloring sweeps, recognizers) need single-word masks.
inline constexpr int kMaxEnumerationVertices = 64;
inline constexpr int kMaxVertices = 4096;

inline constexpr std::int64_t choose2(std::int64_t n) noexcept { return n * (n - 1) / 2; }

/// Simple undirected graph with a color on every edge. Immutable once built.
///
/// Vertices are 0..n-1. Edges are stored once with u < v, sorted lexicographically.
/// Distinct colors are collected into an ascending palette; hot paths work on
/// palette indices rather than raw ColorIds.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() : EdgeColoredGraph(0) {}
  explicit EdgeColoredGraph(int n);
  /// Throws InvalidInput on a self-loop, an out-of-range endpoint or a duplicate pair.
  EdgeColoredGraph(int n, std::span<const ColoredEdge> edges);
  EdgeColoredGraph(int n, std::initializer_list<ColoredEdge> edges)
      : EdgeColoredGraph(n, std::span<const ColoredEdge>(edges.begin(), edges.size())) {}

  int n() const noexcept { return n_; }
  std::int64_t m() const noexcept { return static_cast<std::int64_t>(edges_.size()); }
  int c() const noexcept { return static_cast<int>(palette_.size()); }

  std::span<const ColoredEdge> edges() const noexcept { return edges_; }
  std::span<const ColorId> palette() const noexcept { return palette_; }
  /// Palette index of each edge, aligned with edges().
  std::span<const int> edge_colors() const noexcept { return edge_color_index_; }
  /// Number of edges carrying palette color `index`.
  int class_size(int index) const { return class_size_[static_cast<std::size_t>(index)]; }

  std::span<const Neighbor> neighbors(Vertex v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(rows_[static_cast<std::size_t>(v)].size()); }

  /// Palette index of edge {u,v}, or -1 when absent.
  int color_index(Vertex u, Vertex v) const;
  std::optional<ColorId> color(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return color_index(u, v) >= 0; }

  /// Only valid when n() <= kMaxEnumerationVertices.
  bool has_masks() const noexcept { return n_ <= kMaxEnumerationVertices; }
  std::uint64_t neighbor_mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }

  bool is_complete() const noexcept { return m() == choose2(n_); }

  /// Removes v and renumbers the remaining vertices by order-preserving compaction.
  EdgeColoredGraph without_vertex(Vertex v) const;
  EdgeColoredGraph without_edge(Vertex u, Vertex v) const;
  /// Subgraph induced on `keep` (ascending, distinct); vertex keep[i] becomes i.
  EdgeColoredGraph induced(std::span<const Vertex> keep) const;
  /// Copy with edge {u,v} (which must exist) recolored.
  EdgeColoredGraph recolored(Vertex u, Vertex v, ColorId color) const;

  friend bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void index();
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::vector<ColoredEdge> edges_;
  std::vector<int> edge_color_index_;
  std::vector<ColorId> palette_;
  std::vector<int> class_size_;
  std::vector<std::vector<Neighbor>> rows_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::int32_t> dense_;  // n*n palette indices when n is small
};

struct VertexStats {
  int degree = 0;
  int color_degree = 0;
  int saturated_degree = 0;

  friend bool operator==(const VertexStats&, const VertexStats&) = default;
};

using DegreeProfile = std::vector<VertexStats>;

struct GraphStats {
  std::int64_t m = 0;
  std::int64_t c = 0;
  DegreeProfile profile;

  std::int64_t sum_color_degree() const;
  std::int64_t sum_saturated_degree() const;
};

/// m, c and per-vertex d, d^c, d^s. d^s(v) = c(G) - c(G - v), obtained from per-color
/// endpoint support: a color is unique to v iff every edge of its class touches v.
GraphStats stats(const EdgeColoredGraph& g);
DegreeProfile degree_profile(const EdgeColoredGraph& g);

/// Validating wrapper over the constructor, mirroring the other free-function operations.
EdgeColoredGraph build(int n, std::span<const ColoredEdge> edges);
EdgeColoredGraph delete_vertex(const EdgeColoredGraph& g, Vertex v);
EdgeColoredGraph delete_edge(const EdgeColoredGraph& g, Vertex u, Vertex v);

/// Relabels colors 0..c-1 in order of first appearance over the sorted edge list.
EdgeColoredGraph canonicalize_colors(const EdgeColoredGraph& g);

}  // namespace rainbow
