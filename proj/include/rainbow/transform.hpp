#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/oriented.hpp"
#include "rainbow/subgraphs.hpp"

namespace rainbow {

/// Number of weak components of the subdigraph induced on v's out-neighborhood.
int out_component_number(const OrientedGraph& d, Vertex v);
std::int64_t out_component_sum(const OrientedGraph& d);

struct AssociatedColoring {
  EdgeColoredGraph graph;
  /// Color of each arc, aligned with OrientedGraph::arcs().
  std::vector<ColorId> arc_colors;
};

/// Underlying graph of d where arcs from a common tail into one weak component of its
/// out-neighborhood share a color. Colors are numbered by tail, then by the smallest
/// vertex of the component.
AssociatedColoring associated_colored_graph(const OrientedGraph& d);

/// Vertex triples spanning a directed 3-cycle, sorted.
std::vector<Triangle> directed_triangles(const OrientedGraph& d);

/// Directed triangles forced by a(D) + sum of out-component numbers >= C(n+1,2) + k - 1.
std::int64_t guaranteed_directed_triangles(std::int64_t n, std::int64_t arcs, std::int64_t omega_sum);

/// Two same-colored edges center-leaf1 and center-leaf2, leaf1 < leaf2.
struct MonoPath3 {
  Vertex center;
  Vertex leaf1;
  Vertex leaf2;

  friend bool operator==(const MonoPath3&, const MonoPath3&) = default;
};

/// Every monochromatic 2-edge path, ordered by center then leaves.
std::vector<MonoPath3> find_monochromatic_p3(const EdgeColoredGraph& g);
/// First monochromatic path a-b-c-d on four distinct vertices (lexicographic in (b, c, a, d)).
std::optional<std::vector<Vertex>> find_monochromatic_p4(const EdgeColoredGraph& g);

enum class ArcOrigin { p3_forced, triangle_cycled, free_default };

struct OrientationReport {
  OrientedGraph digraph;
  /// Provenance of each arc, aligned with digraph.arcs().
  std::vector<ArcOrigin> origin;
};

/// Orients g so every monochromatic P3 points away from its center, every rainbow
/// triangle becomes a directed 3-cycle (a->b->c->a for a < b < c) and the remaining
/// edges go from lower to higher index.
///
/// Preconditions (PreconditionError naming the witness otherwise): no monochromatic P4,
/// no rainbow-triangle edge inside a monochromatic P3, rainbow triangles pairwise
/// edge-disjoint.
OrientationReport orient_by_p3_rule(const EdgeColoredGraph& g);

}  // namespace rainbow
