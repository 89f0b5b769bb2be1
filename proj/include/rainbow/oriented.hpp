#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

struct Arc {
  Vertex tail;
  Vertex head;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Digraph with at most one arc per vertex pair (no loops, no digons).
class OrientedGraph {
 public:
  OrientedGraph() : OrientedGraph(0) {}
  explicit OrientedGraph(int n);
  /// Throws InvalidInput on loops, repeated arcs, digons or out-of-range endpoints.
  OrientedGraph(int n, std::span<const Arc> arcs);
  OrientedGraph(int n, std::initializer_list<Arc> arcs)
      : OrientedGraph(n, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  int n() const noexcept { return n_; }
  std::int64_t arc_count() const noexcept { return static_cast<std::int64_t>(arcs_.size()); }
  /// Sorted by (tail, head).
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out_[static_cast<std::size_t>(v)].size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_[static_cast<std::size_t>(v)].size()); }

  bool has_arc(Vertex tail, Vertex head) const;
  /// Either direction.
  bool adjacent(Vertex a, Vertex b) const { return has_arc(a, b) || has_arc(b, a); }

  friend bool operator==(const OrientedGraph& a, const OrientedGraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

}  // namespace rainbow
