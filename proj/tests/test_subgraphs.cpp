#include <tuple>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/subgraphs.hpp"

using namespace rainbow;

namespace {

std::vector<std::tuple<Vertex, Vertex, Vertex>> as_tuples(const std::vector<Triangle>& ts) {
  std::vector<std::tuple<Vertex, Vertex, Vertex>> out;
  for (const auto& t : ts) out.emplace_back(t.a, t.b, t.c);
  return out;
}

EdgeColoredGraph rainbow_complete(int n) {
  std::vector<ColoredEdge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, ColorId{static_cast<std::int64_t>(edges.size())}});
  return EdgeColoredGraph(n, edges);
}

EdgeColoredGraph mono_complete(int n) {
  std::vector<ColoredEdge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, ColorId{0}});
  return EdgeColoredGraph(n, edges);
}

}  // namespace

TEST_SUITE("subgraphs") {
  TEST_CASE("rainbow triangles on fixed graphs") {
    CHECK(count_rainbow_triangles(rainbow_complete(3)) == 1);
    CHECK(count_rainbow_triangles(mono_complete(7)) == 0);
    const auto f = build_gk(10, 2).graph;
    CHECK(count_rainbow_triangles(f) == 2);
    CHECK(list_rainbow_triangles(f) == std::vector<Triangle>{{4, 5, 6}, {7, 8, 9}});
  }

  TEST_CASE("parallel and serial triangle counts agree with the oracle") {
    auto rng = make_rng(21, 0);
    for (int trial = 0; trial < 150; ++trial) {
      const int n = 3 + trial % 14;
      const auto g = random_colored_graph(rng, n, 0.3 + 0.1 * (trial % 7), 2 + trial % 9);
      const auto expected = oracle::rainbow_triangles(g);
      CHECK(count_rainbow_triangles(g) == static_cast<std::int64_t>(expected.size()));
      CHECK(count_rainbow_triangles_serial(g) == static_cast<std::int64_t>(expected.size()));
      CHECK(as_tuples(list_rainbow_triangles(g)) == expected);
    }
  }

  TEST_CASE("row-merge path beyond 64 vertices") {
    auto rng = make_rng(22, 0);
    for (int n : {70, 150}) {
      const auto g = random_colored_graph(rng, n, 0.2, 6);
      const auto expected = oracle::rainbow_triangles(g);
      CHECK(count_rainbow_triangles(g) == static_cast<std::int64_t>(expected.size()));
      CHECK(count_rainbow_triangles_serial(g) == static_cast<std::int64_t>(expected.size()));
      CHECK(as_tuples(list_rainbow_triangles(g)) == expected);
    }
  }

  TEST_CASE("rainbow cliques") {
    CHECK(enumerate_rainbow_cliques(rainbow_complete(6), 6) == std::vector<Clique>{{0, 1, 2, 3, 4, 5}});
    CHECK(enumerate_rainbow_cliques(build_hnk(11, 7).graph, 7).empty());
    CHECK(enumerate_rainbow_cliques(rainbow_complete(4), 5).empty());
    CHECK_THROWS_AS(enumerate_rainbow_cliques(rainbow_complete(4), 2), PreconditionError);

    auto rng = make_rng(23, 0);
    for (int trial = 0; trial < 60; ++trial) {
      const auto g = random_colored_graph(rng, 8, 0.9, 12 + trial % 10);
      const auto expected = oracle::rainbow_cliques(g, 4);
      CHECK(enumerate_rainbow_cliques(g, 4) == expected);
      CHECK(count_rainbow_cliques(g, 4) == static_cast<std::int64_t>(expected.size()));
      if (expected.size() > 2) {
        const std::vector<Clique> head(expected.begin(), expected.begin() + 2);
        CHECK(enumerate_rainbow_cliques(g, 4, 2) == head);
      }
    }
  }

  TEST_CASE("guarantee formulas") {
    CHECK(guaranteed_triangles_mc(5, 10, 5) == 1);
    CHECK(guaranteed_triangles_mc(10, 45, 11) == 2);
    CHECK(guaranteed_triangles_mc(5, 4, 3) == 0);
    CHECK(guaranteed_triangles_mc(0, 0, 0) == 0);
    CHECK_THROWS_AS(guaranteed_triangles_mc(3, 4, 1), PreconditionError);

    CHECK(guaranteed_triangles_colordeg(5, 15) == 1);
    CHECK(guaranteed_triangles_colordeg(5, 14) == 0);
    CHECK(guaranteed_triangles_colordeg(10, 57) == 3);  // C(11,2) = 55

    CHECK(guaranteed_cliques_mc(11, 7, 55, 51) == 1);
    CHECK(guaranteed_cliques_mc(11, 7, 55, 49) == 0);
    CHECK(guaranteed_cliques_mc(11, 7, 0, 0) == 0);
    CHECK_THROWS_AS(guaranteed_cliques_mc(5, 7, 0, 0), PreconditionError);

    CHECK(triangle_threshold(10) == 55);
    CHECK(clique_threshold(11, 7) == 55 + oracle::turan_edges(11, 5) + 2);
  }
}
