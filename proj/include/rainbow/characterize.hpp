#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

using VertexParts = std::vector<std::vector<Vertex>>;

/// Node of a G_k membership certificate. Vertex lists use the input graph's numbering.
struct GkNode {
  enum class Kind { vertex, triangle, join };
  Kind kind = Kind::vertex;
  std::vector<Vertex> vertices;
  /// Rainbow triangles inside this node's vertex set.
  int k = 0;
  std::optional<ColorId> join_color;
  int left = -1;
  int right = -1;
};

/// Recursion tree: leaves are single vertices or rainbow triangles, internal nodes are
/// splits whose cross edges all carry `join_color`.
struct GkCertificate {
  std::vector<GkNode> nodes;
  int root = -1;
};

/// Certificate iff g is complete with c = n + k - 1, exactly k rainbow triangles and the
/// recursive monochromatic-join structure. Requires n <= kMaxEnumerationVertices.
std::optional<GkCertificate> is_in_gk(const EdgeColoredGraph& g, int k);
/// Rechecks a certificate from scratch without using the recognizer's search state.
bool validate_gk_certificate(const EdgeColoredGraph& g, int k, const GkCertificate& cert);

struct HkCertificate {
  enum class Case { I, II };
  Case which = Case::I;
  /// Partition carrying the rainbow spanning T(n,k-2), largest parts first.
  VertexParts parts;
  /// Case I: the shared intra-part color.
  std::optional<ColorId> extra_color;
  std::int64_t turan_edges = 0;
};

/// Case I: g is H_{n,k-2} up to vertex permutation and color renaming.
/// Case II: floor(n/(k-2)) = 1, g complete, c = t(n,k-2) + 1, a rainbow spanning
/// T(n,k-2) exists and no K_k is rainbow. Throws PreconditionError unless n >= k >= 4.
std::optional<HkCertificate> is_in_hk(const EdgeColoredGraph& g, int k);
bool validate_hk_certificate(const EdgeColoredGraph& g, int k, const HkCertificate& cert);

/// Balanced `parts`-partition whose cross edges are pairwise distinctly colored. Vertices are
/// placed in index order, each trying existing parts before opening a new one; the first
/// complete assignment wins. Throws PreconditionError on a non-complete graph.
std::optional<VertexParts> find_rainbow_spanning_turan(const EdgeColoredGraph& g, int parts);

/// When every intra-part edge shares one color absent from the cross edges, that color.
std::optional<ColorId> common_intra_part_color(const EdgeColoredGraph& g, const VertexParts& parts);

std::string to_json(const GkCertificate& cert);
std::string to_json(const HkCertificate& cert);

}  // namespace rainbow
