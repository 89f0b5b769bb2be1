#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/subgraphs.hpp"
#include "rainbow/turan.hpp"

namespace rainbow {

/// Ground-truth structure attached by each generator.
struct ConstructionMetadata {
  std::string name;
  std::map<std::string, int> params;
  /// Partite sets (Turan-based constructions), largest first.
  std::vector<std::vector<Vertex>> parts;
  /// Designated rainbow triangles (G_k family).
  std::vector<Triangle> triangles;
  /// One join color per G_k step that had a non-empty predecessor.
  std::vector<ColorId> join_colors;
  /// H_{n,k-2}: the shared intra-part color. Case-(II) figure: the single fresh color.
  std::optional<ColorId> extra_color;
};

struct LabeledConstruction {
  EdgeColoredGraph graph;
  ConstructionMetadata meta;
};

std::string metadata_to_json(const ConstructionMetadata& meta);

/// Complete k-partite graph on balanced parts, vertices assigned to parts consecutively.
/// Rainbow: edges get colors 0..t-1 in edge order; otherwise every edge has color 0.
LabeledConstruction turan_graph(int n, int k, bool rainbow);

/// The extremal graph with exactly k vertex-disjoint rainbow triangles and c = n + k - 1.
///
/// G_0 is a complete graph on the first n - 3k vertices where edge {i, j}, i < j, has
/// color i. Each of the k steps appends a rainbow triangle on three fresh colors and
/// joins it to everything before with one further fresh color (skipped while the
/// predecessor is empty). Requires n >= 3k, k >= 0.
LabeledConstruction build_gk(int n, int k);

/// Complete graph on a rainbow T(n,k-2) whose intra-part edges all share one extra color.
/// Requires n >= k >= 4. For n <= 12 absence of a rainbow K_k is checked on build.
LabeledConstruction build_hnk(int n, int k);

/// Rainbow T(8,5) (parts 2,2,2,1,1) completed so that no K_7 is rainbow while using one
/// fresh color: one intra-pair edge takes the fresh color, the other two reuse Turan
/// colors of edges from their own pair to a singleton. The assignment is the
/// lexicographically first valid one. Only (8,7) is accepted.
LabeledConstruction build_case2_figure(int n = 8, int k = 7);

/// G_1 on n vertices with the edges from each of v_1..v_{n-4} to the triangle recolored
/// with that vertex's own G_0 color. Requires n >= 7.
LabeledConstruction build_recolored_g1(int n);

}  // namespace rainbow
