#include "rainbow/transform.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Component label (root position in the sorted out-neighborhood) of each out-neighbor.
std::vector<std::size_t> out_components(const OrientedGraph& d, Vertex v) {
  const auto out = d.out_neighbors(v);
  DisjointSet sets(out.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (d.adjacent(out[i], out[j])) sets.unite(i, j);
  std::vector<std::size_t> label(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) label[i] = sets.find(i);
  return label;
}

void check_vertex(const OrientedGraph& d, Vertex v) {
  if (v < 0 || v >= d.n())
    throw PreconditionError("vertex " + std::to_string(v) + " not in digraph of order " +
                            std::to_string(d.n()));
}

using EdgeKey = std::pair<Vertex, Vertex>;

EdgeKey key(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

std::string path_text(std::initializer_list<Vertex> vs) {
  std::string s;
  for (Vertex v : vs) s += (s.empty() ? "" : "-") + std::to_string(v);
  return s;
}

}  // namespace

int out_component_number(const OrientedGraph& d, Vertex v) {
  check_vertex(d, v);
  const auto label = out_components(d, v);
  int count = 0;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i] == i) ++count;
  return count;
}

std::int64_t out_component_sum(const OrientedGraph& d) {
  std::int64_t sum = 0;
  for (Vertex v = 0; v < d.n(); ++v) sum += out_component_number(d, v);
  return sum;
}

AssociatedColoring associated_colored_graph(const OrientedGraph& d) {
  std::vector<ColoredEdge> edges;
  AssociatedColoring out;
  out.arc_colors.reserve(static_cast<std::size_t>(d.arc_count()));
  std::int64_t next = 0;
  // arcs() is sorted by tail then head, matching out_neighbors() order per tail.
  for (Vertex v = 0; v < d.n(); ++v) {
    const auto label = out_components(d, v);
    std::map<std::size_t, std::int64_t> color_of_root;
    const auto heads = d.out_neighbors(v);
    for (std::size_t i = 0; i < heads.size(); ++i) {
      auto [it, fresh] = color_of_root.try_emplace(label[i], next);
      if (fresh) ++next;
      const ColorId col{it->second};
      edges.push_back({v, heads[i], col});
      out.arc_colors.push_back(col);
    }
  }
  out.graph = EdgeColoredGraph(d.n(), edges);
  return out;
}

std::vector<Triangle> directed_triangles(const OrientedGraph& d) {
  std::vector<Triangle> out;
  for (const auto& a : d.arcs())
    for (Vertex w : d.out_neighbors(a.head))
      if (d.has_arc(w, a.tail)) {
        // Each cycle is seen from all three arcs; keep it once, from its smallest tail.
        if (a.tail < a.head && a.tail < w) {
          std::array<Vertex, 3> t{a.tail, a.head, w};
          std::sort(t.begin(), t.end());
          out.push_back({t[0], t[1], t[2]});
        }
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t guaranteed_directed_triangles(std::int64_t n, std::int64_t arcs, std::int64_t omega_sum) {
  if (n == 0) return 0;
  return std::max<std::int64_t>(0, arcs + omega_sum - choose2(n + 1) + 1);
}

std::vector<MonoPath3> find_monochromatic_p3(const EdgeColoredGraph& g) {
  std::vector<MonoPath3> out;
  for (Vertex b = 0; b < g.n(); ++b) {
    const auto row = g.neighbors(b);
    for (std::size_t i = 0; i < row.size(); ++i)
      for (std::size_t j = i + 1; j < row.size(); ++j)
        if (row[i].color == row[j].color) out.push_back({b, row[i].vertex, row[j].vertex});
  }
  return out;
}

std::optional<std::vector<Vertex>> find_monochromatic_p4(const EdgeColoredGraph& g) {
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Vertex b = g.edges()[i].u, c = g.edges()[i].v;
    const int col = g.edge_colors()[i];
    for (const auto& na : g.neighbors(b)) {
      if (na.color != col || na.vertex == c) continue;
      for (const auto& nd : g.neighbors(c)) {
        if (nd.color != col || nd.vertex == b || nd.vertex == na.vertex) continue;
        return std::vector<Vertex>{na.vertex, b, c, nd.vertex};
      }
    }
  }
  return std::nullopt;
}

OrientationReport orient_by_p3_rule(const EdgeColoredGraph& g) {
  if (auto p4 = find_monochromatic_p4(g))
    throw PreconditionError("monochromatic P4 " +
                            path_text({(*p4)[0], (*p4)[1], (*p4)[2], (*p4)[3]}));

  const auto triangles = list_rainbow_triangles(g);
  std::map<EdgeKey, std::size_t> triangle_of;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const auto& tri = triangles[t];
    for (auto e : {key(tri.a, tri.b), key(tri.b, tri.c), key(tri.a, tri.c)}) {
      auto [it, fresh] = triangle_of.emplace(e, t);
      if (!fresh) {
        const auto& other = triangles[it->second];
        throw PreconditionError("rainbow triangles " + path_text({other.a, other.b, other.c}) +
                                " and " + path_text({tri.a, tri.b, tri.c}) + " share edge " +
                                path_text({e.first, e.second}));
      }
    }
  }

  // Tail of each forced edge.
  std::map<EdgeKey, Vertex> forced;
  for (const auto& p : find_monochromatic_p3(g)) {
    for (Vertex leaf : {p.leaf1, p.leaf2}) {
      const auto e = key(p.center, leaf);
      if (triangle_of.count(e))
        throw PreconditionError("rainbow-triangle edge " + path_text({e.first, e.second}) +
                                " lies in monochromatic P3 " +
                                path_text({p.leaf1, p.center, p.leaf2}));
      auto [it, fresh] = forced.emplace(e, p.center);
      if (!fresh && it->second != p.center)
        throw PreconditionError("edge " + path_text({e.first, e.second}) +
                                " is forced in both directions");
    }
  }

  std::vector<Arc> arcs;
  std::map<Arc, ArcOrigin> origin_of;
  for (const auto& e : g.edges()) {
    const auto k = key(e.u, e.v);
    Arc arc{e.u, e.v};
    ArcOrigin origin = ArcOrigin::free_default;
    if (auto f = forced.find(k); f != forced.end()) {
      arc = {f->second, f->second == e.u ? e.v : e.u};
      origin = ArcOrigin::p3_forced;
    } else if (auto t = triangle_of.find(k); t != triangle_of.end()) {
      const auto& tri = triangles[t->second];
      // a -> b -> c -> a
      if (k == key(tri.a, tri.c)) arc = {tri.c, tri.a};
      origin = ArcOrigin::triangle_cycled;
    }
    arcs.push_back(arc);
    origin_of.emplace(arc, origin);
  }
  OrientationReport report{OrientedGraph(g.n(), arcs), {}};
  for (const auto& a : report.digraph.arcs()) report.origin.push_back(origin_of.at(a));
  return report;
}

}  // namespace rainbow
