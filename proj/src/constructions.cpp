#include "rainbow/constructions.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"
#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

std::vector<std::vector<Vertex>> consecutive_parts(const TuranPartition& part) {
  std::vector<std::vector<Vertex>> parts;
  Vertex next = 0;
  for (int size : part.sizes) {
    auto& p = parts.emplace_back();
    for (int j = 0; j < size; ++j) p.push_back(next++);
  }
  return parts;
}

std::vector<int> part_of(int n, const std::vector<std::vector<Vertex>>& parts) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (Vertex v : parts[p]) owner[static_cast<std::size_t>(v)] = static_cast<int>(p);
  return owner;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("construction invariant violated: " + what);
}

// Rainbow T(n,q) on consecutive parts plus the given intra-part colors, in edge order.
std::vector<ColoredEdge> rainbow_turan_edges(int n, const std::vector<int>& owner) {
  std::vector<ColoredEdge> edges;
  std::int64_t next = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)])
        edges.push_back({u, v, ColorId{next++}});
  return edges;
}

}  // namespace

std::string metadata_to_json(const ConstructionMetadata& meta) {
  nlohmann::json doc;
  doc["construction"] = meta.name;
  doc["params"] = meta.params;
  if (!meta.parts.empty()) doc["parts"] = meta.parts;
  if (!meta.triangles.empty()) {
    auto& tris = doc["triangles"] = nlohmann::json::array();
    for (const auto& t : meta.triangles) tris.push_back({t.a, t.b, t.c});
  }
  if (!meta.join_colors.empty()) {
    auto& joins = doc["join_colors"] = nlohmann::json::array();
    for (auto c : meta.join_colors) joins.push_back(color_value(c));
  }
  if (meta.extra_color) doc["extra_color"] = color_value(*meta.extra_color);
  return doc.dump(2) + "\n";
}

LabeledConstruction turan_graph(int n, int k, bool rainbow) {
  const auto part = turan_partition(n, k);
  auto parts = consecutive_parts(part);
  const auto owner = part_of(n, parts);
  auto edges = rainbow_turan_edges(n, owner);
  if (!rainbow)
    for (auto& e : edges) e.color = ColorId{0};
  LabeledConstruction out{EdgeColoredGraph(n, edges), {}};
  out.meta.name = rainbow ? "turan-rainbow" : "turan";
  out.meta.params = {{"n", n}, {"parts", k}};
  out.meta.parts = std::move(parts);
  require(out.graph.m() == turan_number(n, k), "Turan edge count");
  return out;
}

LabeledConstruction build_gk(int n, int k) {
  if (k < 0) throw PreconditionError("k must be non-negative");
  if (n < 3 * k)
    throw PreconditionError("n < 3k (n = " + std::to_string(n) + ", k = " + std::to_string(k) + ")");
  const int base = n - 3 * k;
  std::vector<ColoredEdge> edges;
  for (Vertex u = 0; u < base; ++u)
    for (Vertex v = u + 1; v < base; ++v) edges.push_back({u, v, ColorId{u}});

  LabeledConstruction out;
  out.meta.name = "gk";
  out.meta.params = {{"n", n}, {"k", k}};
  std::int64_t next = std::max(0, base - 1);
  for (int step = 0; step < k; ++step) {
    const Vertex a = base + 3 * step, b = a + 1, c = a + 2;
    edges.push_back({a, b, ColorId{next}});
    edges.push_back({a, c, ColorId{next + 1}});
    edges.push_back({b, c, ColorId{next + 2}});
    next += 3;
    out.meta.triangles.push_back({a, b, c});
    if (a == 0) continue;
    const ColorId join{next++};
    out.meta.join_colors.push_back(join);
    for (Vertex u = 0; u < a; ++u)
      for (Vertex w : {a, b, c}) edges.push_back({u, w, join});
  }
  out.graph = EdgeColoredGraph(n, edges);
  if (n > 0) require(out.graph.c() == n + k - 1, "c = n + k - 1");
  require(out.graph.is_complete(), "G_k is complete");
  for (const auto& t : out.meta.triangles)
    require(is_rainbow_triangle(out.graph, t.a, t.b, t.c), "designated triangle is rainbow");
  return out;
}

LabeledConstruction build_hnk(int n, int k) {
  if (k < 4 || n < k)
    throw PreconditionError("H_{n,k-2} requires n >= k >= 4 (got n = " + std::to_string(n) +
                            ", k = " + std::to_string(k) + ")");
  const auto part = turan_partition(n, k - 2);
  auto parts = consecutive_parts(part);
  const auto owner = part_of(n, parts);
  auto edges = rainbow_turan_edges(n, owner);
  const ColorId extra{static_cast<std::int64_t>(edges.size())};
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (owner[static_cast<std::size_t>(u)] == owner[static_cast<std::size_t>(v)])
        edges.push_back({u, v, extra});

  LabeledConstruction out{EdgeColoredGraph(n, edges), {}};
  out.meta.name = "hnk";
  out.meta.params = {{"n", n}, {"k", k}};
  out.meta.parts = std::move(parts);
  out.meta.extra_color = extra;
  const auto t = turan_number(n, k - 2);
  require(out.graph.c() == t + 1, "c = t(n,k-2) + 1");
  require(out.graph.m() + out.graph.c() == choose2(n) + t + 1, "m + c = C(n,2) + t + 1");
  if (n <= 12) require(!has_rainbow_clique(out.graph, k), "no rainbow K_k");
  return out;
}

LabeledConstruction build_case2_figure(int n, int k) {
  if (n != 8 || k != 7)
    throw PreconditionError("the case-(II) figure exists only for n = 8, k = 7");
  const auto part = turan_partition(8, 5);
  auto parts = consecutive_parts(part);  // {0,1} {2,3} {4,5} {6} {7}
  const auto owner = part_of(8, parts);
  const auto turan_edges = rainbow_turan_edges(8, owner);
  const EdgeColoredGraph turan(8, turan_edges);
  const ColorId fresh{static_cast<std::int64_t>(turan_edges.size())};

  std::vector<std::vector<Vertex>> pairs, singles;
  for (const auto& p : parts) (p.size() == 2 ? pairs : singles).push_back(p);

  // Colors of Turan edges from a pair to the singleton parts, ascending.
  auto reuse_candidates = [&](const std::vector<Vertex>& pair) {
    std::vector<ColorId> colors;
    for (Vertex x : pair)
      for (const auto& s : singles) colors.push_back(*turan.color(x, s[0]));
    std::sort(colors.begin(), colors.end());
    return colors;
  };

  for (std::size_t f = 0; f < pairs.size(); ++f) {
    std::vector<std::size_t> others;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (p != f) others.push_back(p);
    for (ColorId first : reuse_candidates(pairs[others[0]])) {
      for (ColorId second : reuse_candidates(pairs[others[1]])) {
        auto edges = turan_edges;
        edges.push_back({pairs[f][0], pairs[f][1], fresh});
        edges.push_back({pairs[others[0]][0], pairs[others[0]][1], first});
        edges.push_back({pairs[others[1]][0], pairs[others[1]][1], second});
        EdgeColoredGraph g(8, edges);
        if (g.c() != turan_number(8, 5) + 1 || has_rainbow_clique(g, 7)) continue;
        LabeledConstruction out{std::move(g), {}};
        out.meta.name = "case2";
        out.meta.params = {{"n", 8}, {"k", 7}};
        out.meta.parts = std::move(parts);
        out.meta.extra_color = fresh;
        return out;
      }
    }
  }
  throw std::logic_error("no valid case-(II) reuse assignment found");
}

LabeledConstruction build_recolored_g1(int n) {
  if (n < 7) throw PreconditionError("recolored G_1 requires n >= 7");
  auto base = build_gk(n, 1);
  const int base_order = n - 3;
  std::vector<ColoredEdge> edges(base.graph.edges().begin(), base.graph.edges().end());
  const auto& tri = base.meta.triangles.front();
  for (auto& e : edges) {
    const bool to_triangle = e.v == tri.a || e.v == tri.b || e.v == tri.c;
    if (to_triangle && e.u < base_order - 1) e.color = ColorId{e.u};
  }
  LabeledConstruction out{EdgeColoredGraph(n, edges), std::move(base.meta)};
  out.meta.name = "recolored-g1";
  out.meta.params = {{"n", n}};
  return out;
}

}  // namespace rainbow
