#include "rainbow/characterize.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>

#include "json.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/subgraphs.hpp"
#include "rainbow/turan.hpp"

namespace rainbow {

namespace {

std::vector<Vertex> mask_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

void sort_parts(VertexParts& parts) {
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
}

class GkSearch {
 public:
  GkSearch(const EdgeColoredGraph& g) : g_(g) {
    const auto c = static_cast<std::size_t>(g.c());
    const auto n = static_cast<std::size_t>(g.n());
    by_color_.assign(c * n, 0);
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
      const auto& e = g.edges()[i];
      const auto col = static_cast<std::size_t>(g.edge_colors()[i]);
      by_color_[col * n + static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      by_color_[col * n + static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
    for (const auto& t : list_rainbow_triangles(g))
      triangles_.push_back((std::uint64_t{1} << t.a) | (std::uint64_t{1} << t.b) |
                           (std::uint64_t{1} << t.c));
    stamp_.assign(c, 0);
  }

  int solve(std::uint64_t set) {
    if (auto it = memo_.find(set); it != memo_.end()) return it->second;
    const int result = solve_uncached(set);
    memo_.emplace(set, result);
    return result;
  }

  std::vector<GkNode> nodes;

 private:
  int rainbow_triangles_in(std::uint64_t set) const {
    int count = 0;
    for (auto t : triangles_)
      if ((t & set) == t) ++count;
    return count;
  }

  // Palette indices used inside `set`, ascending.
  std::vector<int> colors_in(std::uint64_t set) {
    ++epoch_;
    std::vector<int> colors;
    for (auto a = set; a; a &= a - 1) {
      const Vertex u = std::countr_zero(a);
      for (auto b = a & (a - 1); b; b &= b - 1) {
        const int col = g_.color_index(u, std::countr_zero(b));
        auto& s = stamp_[static_cast<std::size_t>(col)];
        if (s != epoch_) {
          s = epoch_;
          colors.push_back(col);
        }
      }
    }
    std::sort(colors.begin(), colors.end());
    return colors;
  }

  std::uint64_t component(std::uint64_t set, Vertex start, int skip_color) const {
    const auto n = static_cast<std::size_t>(g_.n());
    const std::uint64_t* skip = by_color_.data() + static_cast<std::size_t>(skip_color) * n;
    std::uint64_t seen = std::uint64_t{1} << start, frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (auto f = frontier; f; f &= f - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(f));
        next |= g_.neighbor_mask(static_cast<Vertex>(v)) & ~skip[v];
      }
      next &= set & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  int add(GkNode node) {
    nodes.push_back(std::move(node));
    return static_cast<int>(nodes.size()) - 1;
  }

  int solve_uncached(std::uint64_t set) {
    const int size = std::popcount(set);
    const int k = rainbow_triangles_in(set);
    const auto colors = colors_in(set);
    if (static_cast<int>(colors.size()) != size + k - 1) return -1;
    if (size == 1) return add({GkNode::Kind::vertex, mask_vertices(set), 0, std::nullopt, -1, -1});
    if (size == 3 && k == 1)
      return add({GkNode::Kind::triangle, mask_vertices(set), 1, std::nullopt, -1, -1});

    // A join color cannot reappear inside either side (the color counts would not add up),
    // so each side is exactly one component of the graph minus that color class.
    const Vertex first = std::countr_zero(set);
    for (int col : colors) {
      const std::uint64_t left = component(set, first, col);
      if (left == set) continue;
      const std::uint64_t right = set & ~left;
      if (component(set, std::countr_zero(right), col) != right) continue;
      const int l = solve(left);
      if (l < 0) continue;
      const int r = solve(right);
      if (r < 0) continue;
      return add({GkNode::Kind::join, mask_vertices(set), k,
                  g_.palette()[static_cast<std::size_t>(col)], l, r});
    }
    return -1;
  }

  const EdgeColoredGraph& g_;
  std::vector<std::uint64_t> by_color_;
  std::vector<std::uint64_t> triangles_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
  std::unordered_map<std::uint64_t, int> memo_;
};

// Rainbow spanning Turan search over vertex -> part assignments.
class TuranSearch {
 public:
  TuranSearch(const EdgeColoredGraph& g, int parts)
      : g_(g),
        q_(parts),
        p_(g.n() / parts),
        big_allowed_(g.n() % parts),
        owner_(static_cast<std::size_t>(g.n()), -1),
        sizes_(static_cast<std::size_t>(parts), 0),
        used_(static_cast<std::size_t>(g.c()), 0) {}

  std::optional<VertexParts> run() {
    if (!place(0)) return std::nullopt;
    VertexParts parts(static_cast<std::size_t>(q_));
    for (Vertex v = 0; v < g_.n(); ++v) parts[static_cast<std::size_t>(owner_[static_cast<std::size_t>(v)])].push_back(v);
    sort_parts(parts);
    return parts;
  }

 private:
  bool feasible(Vertex next) const {
    int deficit = 0;
    for (int j = 0; j < q_; ++j) deficit += std::max(0, p_ - sizes_[static_cast<std::size_t>(j)]);
    return deficit <= g_.n() - next;
  }

  bool place(Vertex v) {
    if (v == g_.n()) return true;
    if (!feasible(v)) return false;
    for (int j = 0; j < q_; ++j) {
      const int size = sizes_[static_cast<std::size_t>(j)];
      if (size == 0 && j > opened_) break;  // empty parts are interchangeable
      if (size == p_ + 1) continue;
      if (size == p_ && big_used_ == big_allowed_) continue;
      if (try_place(v, j)) return true;
    }
    return false;
  }

  bool try_place(Vertex v, int j) {
    std::vector<int> added;
    bool ok = true;
    for (Vertex w = 0; w < v; ++w) {
      if (owner_[static_cast<std::size_t>(w)] == j) continue;
      const int col = g_.color_index(v, w);
      auto& mark = used_[static_cast<std::size_t>(col)];
      if (mark) {
        ok = false;
        break;
      }
      mark = 1;
      added.push_back(col);
    }
    if (ok) {
      owner_[static_cast<std::size_t>(v)] = j;
      auto& size = sizes_[static_cast<std::size_t>(j)];
      const bool grows_big = size == p_;
      const int prev_opened = opened_;
      if (size == 0 && j == opened_) ++opened_;
      ++size;
      if (grows_big) ++big_used_;
      if (place(v + 1)) return true;
      if (grows_big) --big_used_;
      --size;
      opened_ = prev_opened;
      owner_[static_cast<std::size_t>(v)] = -1;
    }
    for (int col : added) used_[static_cast<std::size_t>(col)] = 0;
    return false;
  }

  const EdgeColoredGraph& g_;
  int q_;
  int p_;
  int big_allowed_;
  int big_used_ = 0;
  int opened_ = 0;
  std::vector<int> owner_;
  std::vector<int> sizes_;
  std::vector<unsigned char> used_;
};

std::optional<HkCertificate> match_case_one(const EdgeColoredGraph& g, int k) {
  const int n = g.n();
  const auto target = turan_partition(n, k - 2).sizes;
  const auto t = turan_number(n, k - 2);
  for (int col = 0; col < g.c(); ++col) {
    // Components of the color class, isolated vertices included.
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    VertexParts parts;
    for (Vertex s = 0; s < n; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      auto& part = parts.emplace_back();
      std::vector<Vertex> stack{s};
      comp[static_cast<std::size_t>(s)] = static_cast<int>(parts.size()) - 1;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        part.push_back(v);
        for (const auto& nb : g.neighbors(v))
          if (nb.color == col && comp[static_cast<std::size_t>(nb.vertex)] < 0) {
            comp[static_cast<std::size_t>(nb.vertex)] = comp[static_cast<std::size_t>(s)];
            stack.push_back(nb.vertex);
          }
      }
    }
    std::vector<int> sizes;
    for (const auto& p : parts) sizes.push_back(static_cast<int>(p.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    if (sizes != target) continue;
    bool ok = true;
    std::int64_t cross = 0;
    for (std::size_t i = 0; i < g.edges().size() && ok; ++i) {
      const auto& e = g.edges()[i];
      const int ec = g.edge_colors()[i];
      const bool same = comp[static_cast<std::size_t>(e.u)] == comp[static_cast<std::size_t>(e.v)];
      if (same) {
        ok = ec == col;
      } else {
        ok = ec != col && g.class_size(ec) == 1;
        ++cross;
      }
    }
    if (!ok || cross != t) continue;
    sort_parts(parts);
    return HkCertificate{HkCertificate::Case::I, std::move(parts),
                         g.palette()[static_cast<std::size_t>(col)], t};
  }
  return std::nullopt;
}

bool is_balanced_partition(int n, int q, const VertexParts& parts) {
  if (static_cast<int>(parts.size()) != q) return false;
  std::vector<int> sizes;
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (const auto& p : parts) {
    sizes.push_back(static_cast<int>(p.size()));
    for (Vertex v : p) {
      if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]++) return false;
    }
  }
  if (std::count(seen.begin(), seen.end(), 1) != n) return false;
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes == turan_partition(n, q).sizes;
}

bool cross_edges_rainbow(const EdgeColoredGraph& g, const VertexParts& parts) {
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (Vertex v : parts[p]) owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
  std::set<ColorId> seen;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (owner[static_cast<std::size_t>(u)] == owner[static_cast<std::size_t>(v)]) continue;
      const auto col = g.color(u, v);
      if (!col || !seen.insert(*col).second) return false;
    }
  return true;
}

}  // namespace

std::optional<GkCertificate> is_in_gk(const EdgeColoredGraph& g, int k) {
  if (!g.has_masks())
    throw PreconditionError("G_k recognition supports at most " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
  if (g.n() == 0 || k < 0 || !g.is_complete() || g.c() != g.n() + k - 1) return std::nullopt;
  if (count_rainbow_triangles(g) != k) return std::nullopt;
  GkSearch search(g);
  const std::uint64_t all = g.n() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n()) - 1);
  const int root = search.solve(all);
  if (root < 0) return std::nullopt;
  return GkCertificate{std::move(search.nodes), root};
}

bool validate_gk_certificate(const EdgeColoredGraph& g, int k, const GkCertificate& cert) {
  if (cert.root < 0 || cert.root >= static_cast<int>(cert.nodes.size())) return false;
  const auto& root = cert.nodes[static_cast<std::size_t>(cert.root)];
  if (root.k != k || static_cast<int>(root.vertices.size()) != g.n()) return false;
  std::vector<int> leaf_hits(static_cast<std::size_t>(g.n()), 0);

  // Explicit stack; each node checked against a freshly induced subgraph.
  std::vector<int> stack{cert.root};
  std::size_t visited = 0;
  while (!stack.empty()) {
    const int id = stack.back();
    stack.pop_back();
    if (id < 0 || id >= static_cast<int>(cert.nodes.size()) || ++visited > cert.nodes.size())
      return false;
    const auto& node = cert.nodes[static_cast<std::size_t>(id)];
    if (node.vertices.empty() || !std::is_sorted(node.vertices.begin(), node.vertices.end()))
      return false;
    const auto sub = g.induced(node.vertices);
    const int size = sub.n();
    if (!sub.is_complete() || sub.c() != size + node.k - 1) return false;
    if (count_rainbow_triangles_serial(sub) != node.k) return false;
    switch (node.kind) {
      case GkNode::Kind::vertex:
        if (size != 1 || node.k != 0) return false;
        ++leaf_hits[static_cast<std::size_t>(node.vertices[0])];
        break;
      case GkNode::Kind::triangle:
        if (size != 3 || node.k != 1) return false;
        for (Vertex v : node.vertices) ++leaf_hits[static_cast<std::size_t>(v)];
        break;
      case GkNode::Kind::join: {
        if (!node.join_color || node.left < 0 || node.right < 0) return false;
        const auto& l = cert.nodes[static_cast<std::size_t>(node.left)];
        const auto& r = cert.nodes[static_cast<std::size_t>(node.right)];
        if (l.k + r.k != node.k) return false;
        std::vector<Vertex> merged;
        std::merge(l.vertices.begin(), l.vertices.end(), r.vertices.begin(), r.vertices.end(),
                   std::back_inserter(merged));
        if (merged != node.vertices ||
            std::adjacent_find(merged.begin(), merged.end()) != merged.end())
          return false;
        for (Vertex a : l.vertices)
          for (Vertex b : r.vertices)
            if (g.color(a, b) != node.join_color) return false;
        stack.push_back(node.left);
        stack.push_back(node.right);
        break;
      }
    }
  }
  return std::all_of(leaf_hits.begin(), leaf_hits.end(), [](int h) { return h == 1; });
}

std::optional<VertexParts> find_rainbow_spanning_turan(const EdgeColoredGraph& g, int parts) {
  if (!g.is_complete()) throw PreconditionError("rainbow spanning Turan search needs a complete graph");
  if (parts < 1 || parts > g.n())
    throw PreconditionError("part count must satisfy 1 <= parts <= n");
  if (turan_number(g.n(), parts) > g.c()) return std::nullopt;
  return TuranSearch(g, parts).run();
}

std::optional<ColorId> common_intra_part_color(const EdgeColoredGraph& g, const VertexParts& parts) {
  std::optional<ColorId> shared;
  std::vector<int> owner(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (Vertex v : parts[p]) owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
  for (const auto& e : g.edges()) {
    if (owner[static_cast<std::size_t>(e.u)] != owner[static_cast<std::size_t>(e.v)]) continue;
    if (shared && *shared != e.color) return std::nullopt;
    shared = e.color;
  }
  if (!shared) return std::nullopt;
  for (const auto& e : g.edges())
    if (owner[static_cast<std::size_t>(e.u)] != owner[static_cast<std::size_t>(e.v)] && e.color == *shared)
      return std::nullopt;
  return shared;
}

std::optional<HkCertificate> is_in_hk(const EdgeColoredGraph& g, int k) {
  const int n = g.n();
  if (k < 4 || n < k)
    throw PreconditionError("H_k recognition requires n >= k >= 4 (got n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ")");
  if (!g.has_masks())
    throw PreconditionError("H_k recognition supports at most " +
                            std::to_string(kMaxEnumerationVertices) + " vertices");
  if (!g.is_complete()) return std::nullopt;
  if (auto cert = match_case_one(g, k)) return cert;

  const int q = k - 2;
  const auto t = turan_number(n, q);
  if (n / q != 1 || g.c() != t + 1) return std::nullopt;
  auto parts = find_rainbow_spanning_turan(g, q);
  if (!parts || has_rainbow_clique(g, k)) return std::nullopt;
  return HkCertificate{HkCertificate::Case::II, std::move(*parts), std::nullopt, t};
}

bool validate_hk_certificate(const EdgeColoredGraph& g, int k, const HkCertificate& cert) {
  const int n = g.n();
  const int q = k - 2;
  if (k < 4 || n < k || !g.is_complete()) return false;
  if (!is_balanced_partition(n, q, cert.parts) || !cross_edges_rainbow(g, cert.parts)) return false;
  const auto t = turan_number(n, q);
  if (cert.turan_edges != t) return false;
  if (cert.which == HkCertificate::Case::I) {
    return cert.extra_color && common_intra_part_color(g, cert.parts) == cert.extra_color &&
           g.c() == t + 1;
  }
  return n / q == 1 && g.c() == t + 1 && !has_rainbow_clique(g, k);
}

std::string to_json(const GkCertificate& cert) {
  auto node_json = [&](auto&& self, int id) -> nlohmann::json {
    const auto& node = cert.nodes[static_cast<std::size_t>(id)];
    nlohmann::json out;
    out["vertices"] = node.vertices;
    out["rainbow_triangles"] = node.k;
    switch (node.kind) {
      case GkNode::Kind::vertex: out["kind"] = "vertex"; break;
      case GkNode::Kind::triangle: out["kind"] = "triangle"; break;
      case GkNode::Kind::join:
        out["kind"] = "join";
        out["join_color"] = color_value(*node.join_color);
        out["left"] = self(self, node.left);
        out["right"] = self(self, node.right);
        break;
    }
    return out;
  };
  nlohmann::json doc = {{"class", "G_k"}, {"certificate", node_json(node_json, cert.root)}};
  return doc.dump(2) + "\n";
}

std::string to_json(const HkCertificate& cert) {
  nlohmann::json doc = {{"class", "H_k"},
                        {"case", cert.which == HkCertificate::Case::I ? "I" : "II"},
                        {"parts", cert.parts},
                        {"turan_edges", cert.turan_edges}};
  if (cert.extra_color) doc["extra_color"] = color_value(*cert.extra_color);
  return doc.dump(2) + "\n";
}

}  // namespace rainbow
