#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/sampling.hpp"

using namespace rainbow;

namespace {

EdgeColoredGraph rainbow_k3() { return EdgeColoredGraph(3, {{0, 1, ColorId{7}}, {1, 2, ColorId{3}}, {0, 2, ColorId{9}}}); }

EdgeColoredGraph mono_k3() { return EdgeColoredGraph(3, {{0, 1, ColorId{4}}, {1, 2, ColorId{4}}, {0, 2, ColorId{4}}}); }

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("build validates its input") {
    CHECK_THROWS_AS(EdgeColoredGraph(3, {{0, 0, ColorId{1}}}), InvalidInput);
    CHECK_THROWS_AS(EdgeColoredGraph(3, {{0, 3, ColorId{1}}}), InvalidInput);
    CHECK_THROWS_AS(EdgeColoredGraph(3, {{0, 1, ColorId{-1}}}), InvalidInput);
    CHECK_THROWS_WITH_AS(EdgeColoredGraph(3, {{0, 1, ColorId{1}}, {1, 0, ColorId{2}}}),
                         doctest::Contains("duplicate"), InvalidInput);
    CHECK_THROWS_AS(EdgeColoredGraph(-1), InvalidInput);
  }

  TEST_CASE("basic accessors") {
    const auto g = rainbow_k3();
    CHECK(g.n() == 3);
    CHECK(g.m() == 3);
    CHECK(g.c() == 3);
    CHECK(g.is_complete());
    CHECK(g.color(2, 1) == ColorId{3});
    CHECK_FALSE(EdgeColoredGraph(4).color(0, 1).has_value());
    REQUIRE(g.palette().size() == 3);
    CHECK(g.palette()[0] == ColorId{3});
    CHECK(g.palette()[2] == ColorId{9});
    CHECK(g.edges()[0].u == 0);
    CHECK(g.edges()[0].v == 1);
    CHECK(g.neighbors(1).size() == 2);
    CHECK(g.neighbors(1)[0].vertex == 0);

    const EdgeColoredGraph empty(4);
    CHECK(empty.m() == 0);
    CHECK(empty.c() == 0);
    CHECK_FALSE(empty.is_complete());
  }

  TEST_CASE("stats on small graphs") {
    const auto s = stats(rainbow_k3());
    CHECK(s.m == 3);
    CHECK(s.c == 3);
    for (const auto& v : s.profile) CHECK(v == VertexStats{2, 2, 2});

    const auto t = stats(mono_k3());
    CHECK(t.c == 1);
    for (const auto& v : t.profile) CHECK(v == VertexStats{2, 1, 0});

    const auto f = build_gk(10, 2).graph;
    CHECK(f.m() == 45);
    CHECK(f.c() == 11);
  }

  TEST_CASE("deletions") {
    const auto g = rainbow_k3();
    const auto a = delete_vertex(g, 0);
    CHECK(a.n() == 2);
    CHECK(a.m() == 1);
    CHECK(a.c() == 1);
    const auto b = delete_edge(g, 0, 1);
    CHECK(b.m() == 2);
    CHECK(b.c() == 2);
    CHECK_THROWS_AS(delete_edge(b, 0, 1), PreconditionError);
    CHECK_THROWS_AS(delete_vertex(g, 3), PreconditionError);

    const auto f = build_gk(10, 2).graph;
    const auto prof = stats(f).profile;
    for (Vertex v : {4, 5, 6, 7, 8, 9}) {
      const auto h = f.without_vertex(v);
      CHECK(h.c() == f.c() - prof[static_cast<std::size_t>(v)].saturated_degree);
      CHECK(h.c() == oracle::colors(f) - oracle::saturated_degree(f, v));
      CHECK(h.m() == f.m() - prof[static_cast<std::size_t>(v)].degree);
    }
  }

  TEST_CASE("induced subgraphs and recoloring") {
    const auto f = build_gk(10, 2).graph;
    const std::vector<Vertex> keep{4, 5, 6};
    const auto t = f.induced(keep);
    CHECK(t.n() == 3);
    CHECK(t.c() == 3);
    const auto r = f.recolored(0, 1, ColorId{100});
    CHECK(r.color(0, 1) == ColorId{100});
    CHECK(r.m() == f.m());
  }

  TEST_CASE("canonical colors") {
    const auto g = canonicalize_colors(rainbow_k3());
    CHECK(g.color(0, 1) == ColorId{0});
    CHECK(g.color(0, 2) == ColorId{1});
    CHECK(g.color(1, 2) == ColorId{2});

    auto rng = make_rng(3, 0);
    for (int trial = 0; trial < 50; ++trial) {
      const auto h = random_colored_graph(rng, 8, 0.6, 5);
      const auto canon = canonicalize_colors(h);
      CHECK(canonicalize_colors(canon) == canon);
      // A color-permuted copy has the same canonical form.
      std::vector<ColoredEdge> shifted(h.edges().begin(), h.edges().end());
      for (auto& e : shifted) e.color = ColorId{(color_value(e.color) * 7 + 11) % 13};
      CHECK(canonicalize_colors(EdgeColoredGraph(8, shifted)) == canon);
    }
  }

  TEST_CASE("degree profile against recounts") {
    auto rng = make_rng(11, 0);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 1 + trial % 12;
      const auto g = random_colored_graph(rng, n, 0.5, 1 + trial % 6);
      const auto s = stats(g);
      std::int64_t sum_s = 0;
      for (Vertex v = 0; v < n; ++v) {
        const auto& p = s.profile[static_cast<std::size_t>(v)];
        CHECK(p.color_degree == oracle::color_degree(g, v));
        CHECK(p.saturated_degree == oracle::saturated_degree(g, v));
        CHECK(p.saturated_degree <= p.color_degree);
        if (p.degree > 0) CHECK(p.color_degree >= 1);
        CHECK(p.color_degree <= p.degree);
        sum_s += p.saturated_degree;
      }
      CHECK(sum_s == s.sum_saturated_degree());
      CHECK(sum_s <= 2 * s.c);
      CHECK(s.sum_color_degree() <= 2 * s.m);
    }
  }

  TEST_CASE("large graphs use the sparse color lookup") {
    std::vector<ColoredEdge> edges;
    for (Vertex v = 1; v < 300; ++v) edges.push_back({0, v, ColorId{v % 3}});
    const EdgeColoredGraph star(300, edges);
    CHECK(star.c() == 3);
    CHECK(star.color(0, 299) == ColorId{2});
    CHECK_FALSE(star.has_edge(1, 2));
    CHECK_FALSE(star.has_masks());
  }
}
