#include "rainbow/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

constexpr int kDenseLimit = 256;

std::string pair_text(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

EdgeColoredGraph::EdgeColoredGraph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidInput("vertex count " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxVertices) + "]");
  index();
}

EdgeColoredGraph::EdgeColoredGraph(int n, std::span<const ColoredEdge> edges) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InvalidInput("vertex count " + std::to_string(n) + " outside [0, " +
                       std::to_string(kMaxVertices) + "]");
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw InvalidInput("edge " + pair_text(e.u, e.v) + " has an endpoint outside [0, " +
                         std::to_string(n) + ")");
    if (color_value(e.color) < 0)
      throw InvalidInput("edge " + pair_text(e.u, e.v) + " has a negative color");
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.color});
  }
  std::sort(edges_.begin(), edges_.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges_.size(); ++i)
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v)
      throw InvalidInput("duplicate pair " + pair_text(edges_[i].u, edges_[i].v));
  index();
}

void EdgeColoredGraph::index() {
  palette_.clear();
  palette_.reserve(edges_.size());
  for (const auto& e : edges_) palette_.push_back(e.color);
  std::sort(palette_.begin(), palette_.end());
  palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());

  const auto un = static_cast<std::size_t>(n_);
  rows_.assign(un, {});
  class_size_.assign(palette_.size(), 0);
  edge_color_index_.resize(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    const int idx = static_cast<int>(std::lower_bound(palette_.begin(), palette_.end(), e.color) -
                                     palette_.begin());
    edge_color_index_[i] = idx;
    ++class_size_[static_cast<std::size_t>(idx)];
    rows_[static_cast<std::size_t>(e.u)].push_back({e.v, idx});
    rows_[static_cast<std::size_t>(e.v)].push_back({e.u, idx});
  }
  for (auto& row : rows_)
    std::sort(row.begin(), row.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });

  masks_.clear();
  if (n_ <= kMaxEnumerationVertices) {
    masks_.assign(un, 0);
    for (const auto& e : edges_) {
      masks_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      masks_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  }
  dense_.clear();
  if (n_ <= kDenseLimit) {
    dense_.assign(un * un, -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const auto u = static_cast<std::size_t>(edges_[i].u);
      const auto v = static_cast<std::size_t>(edges_[i].v);
      dense_[u * un + v] = dense_[v * un + u] = edge_color_index_[i];
    }
  }
}

void EdgeColoredGraph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw PreconditionError("vertex " + std::to_string(v) + " not in graph of order " +
                            std::to_string(n_));
}

int EdgeColoredGraph::color_index(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  if (!dense_.empty())
    return dense_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(v)];
  const auto& row = rows_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(row.begin(), row.end(), v,
                             [](const Neighbor& a, Vertex x) { return a.vertex < x; });
  return (it != row.end() && it->vertex == v) ? it->color : -1;
}

std::optional<ColorId> EdgeColoredGraph::color(Vertex u, Vertex v) const {
  const int idx = color_index(u, v);
  if (idx < 0) return std::nullopt;
  return palette_[static_cast<std::size_t>(idx)];
}

EdgeColoredGraph EdgeColoredGraph::without_vertex(Vertex v) const {
  check_vertex(v);
  std::vector<ColoredEdge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (e.u == v || e.v == v) continue;
    kept.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v, e.color});
  }
  return EdgeColoredGraph(n_ - 1, kept);
}

EdgeColoredGraph EdgeColoredGraph::without_edge(Vertex u, Vertex v) const {
  if (!has_edge(u, v)) throw PreconditionError("edge " + pair_text(u, v) + " not in graph");
  std::vector<ColoredEdge> kept;
  kept.reserve(edges_.size());
  const Vertex a = std::min(u, v), b = std::max(u, v);
  for (const auto& e : edges_)
    if (e.u != a || e.v != b) kept.push_back(e);
  return EdgeColoredGraph(n_, kept);
}

EdgeColoredGraph EdgeColoredGraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> position(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    if (i > 0 && keep[i] <= keep[i - 1])
      throw PreconditionError("induced vertex list must be strictly ascending");
    position[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  }
  std::vector<ColoredEdge> kept;
  for (const auto& e : edges_) {
    const int pu = position[static_cast<std::size_t>(e.u)];
    const int pv = position[static_cast<std::size_t>(e.v)];
    if (pu >= 0 && pv >= 0) kept.push_back({pu, pv, e.color});
  }
  return EdgeColoredGraph(static_cast<int>(keep.size()), kept);
}

EdgeColoredGraph EdgeColoredGraph::recolored(Vertex u, Vertex v, ColorId color) const {
  if (!has_edge(u, v)) throw PreconditionError("edge " + pair_text(u, v) + " not in graph");
  std::vector<ColoredEdge> copy = edges_;
  const Vertex a = std::min(u, v), b = std::max(u, v);
  for (auto& e : copy)
    if (e.u == a && e.v == b) e.color = color;
  return EdgeColoredGraph(n_, copy);
}

std::int64_t GraphStats::sum_color_degree() const {
  std::int64_t s = 0;
  for (const auto& p : profile) s += p.color_degree;
  return s;
}

std::int64_t GraphStats::sum_saturated_degree() const {
  std::int64_t s = 0;
  for (const auto& p : profile) s += p.saturated_degree;
  return s;
}

DegreeProfile degree_profile(const EdgeColoredGraph& g) {
  DegreeProfile profile(static_cast<std::size_t>(g.n()));
  std::vector<int> seen;
  for (Vertex v = 0; v < g.n(); ++v) {
    auto& rec = profile[static_cast<std::size_t>(v)];
    rec.degree = g.degree(v);
    seen.clear();
    for (const auto& nb : g.neighbors(v)) seen.push_back(nb.color);
    std::sort(seen.begin(), seen.end());
    rec.color_degree = static_cast<int>(std::unique(seen.begin(), seen.end()) - seen.begin());
  }

  // Endpoints shared by every edge of a class: at most two vertices per color.
  constexpr Vertex kNone = -1;
  struct Support {
    Vertex a = kNone;
    Vertex b = kNone;
    bool init = false;
  };
  std::vector<Support> support(static_cast<std::size_t>(g.c()));
  const auto edges = g.edges();
  const auto colors = g.edge_colors();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& s = support[static_cast<std::size_t>(colors[i])];
    const Vertex u = edges[i].u, v = edges[i].v;
    if (!s.init) {
      s = {u, v, true};
      continue;
    }
    if (s.a != u && s.a != v) s.a = kNone;
    if (s.b != u && s.b != v) s.b = kNone;
  }
  for (const auto& s : support) {
    if (s.a != kNone) ++profile[static_cast<std::size_t>(s.a)].saturated_degree;
    if (s.b != kNone) ++profile[static_cast<std::size_t>(s.b)].saturated_degree;
  }
  return profile;
}

GraphStats stats(const EdgeColoredGraph& g) { return {g.m(), g.c(), degree_profile(g)}; }

EdgeColoredGraph build(int n, std::span<const ColoredEdge> edges) {
  return EdgeColoredGraph(n, edges);
}

EdgeColoredGraph delete_vertex(const EdgeColoredGraph& g, Vertex v) { return g.without_vertex(v); }

EdgeColoredGraph delete_edge(const EdgeColoredGraph& g, Vertex u, Vertex v) {
  return g.without_edge(u, v);
}

EdgeColoredGraph canonicalize_colors(const EdgeColoredGraph& g) {
  std::vector<int> relabel(static_cast<std::size_t>(g.c()), -1);
  int next = 0;
  std::vector<ColoredEdge> out(g.edges().begin(), g.edges().end());
  const auto colors = g.edge_colors();
  for (std::size_t i = 0; i < out.size(); ++i) {
    int& r = relabel[static_cast<std::size_t>(colors[i])];
    if (r < 0) r = next++;
    out[i].color = ColorId{r};
  }
  return EdgeColoredGraph(g.n(), out);
}

}  // namespace rainbow
