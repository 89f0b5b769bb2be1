#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/subgraphs.hpp"
#include "rainbow/turan.hpp"

using namespace rainbow;

TEST_SUITE("constructions") {
  TEST_CASE("G_k statistics") {
    for (int k = 0; k <= 4; ++k)
      for (int n = std::max(1, 3 * k); n <= 14; ++n) {
        const auto built = build_gk(n, k);
        const auto& g = built.graph;
        CAPTURE(n);
        CAPTURE(k);
        CHECK(g.is_complete());
        CHECK(g.m() + g.c() == oracle::binomial(n + 1, 2) + k - 1);
        CHECK(static_cast<int>(oracle::rainbow_triangles(g).size()) == k);
        CHECK(built.meta.triangles.size() == static_cast<std::size_t>(k));
      }
    CHECK_THROWS_WITH_AS(build_gk(5, 2), doctest::Contains("n < 3k"), PreconditionError);
  }

  TEST_CASE("G_2 on ten vertices") {
    const auto built = build_gk(10, 2);
    CHECK(built.graph.m() == 45);
    CHECK(built.graph.c() == 11);
    CHECK(built.meta.join_colors.size() == 2);
    CHECK(metadata_to_json(built.meta).find("\"construction\": \"gk\"") != std::string::npos);
  }

  TEST_CASE("Turan graphs") {
    const auto t = turan_graph(11, 5, true);
    CHECK(t.graph.m() == 48);
    CHECK(t.graph.c() == 48);
    CHECK(t.meta.parts.size() == 5);
    const auto mono = turan_graph(11, 5, false);
    CHECK(mono.graph.c() == 1);
    CHECK(mono.graph.m() == oracle::turan_edges(11, 5));
  }

  TEST_CASE("H_{n,k-2}") {
    for (int k = 4; k <= 8; ++k)
      for (int n = k; n <= 12; ++n) {
        const auto h = build_hnk(n, k).graph;
        const auto t = oracle::turan_edges(n, k - 2);
        CAPTURE(n);
        CAPTURE(k);
        CHECK(h.is_complete());
        CHECK(h.c() == t + 1);
        CHECK(h.m() + h.c() == oracle::binomial(n, 2) + t + 1);
        if (n <= 9) CHECK(oracle::rainbow_cliques(h, k).empty());
      }
    // n = k: the k-2 parts leave two parts of size 2.
    CHECK(build_hnk(6, 6).graph.c() == oracle::binomial(6, 2) - 1);
    CHECK_THROWS_AS(build_hnk(5, 6), PreconditionError);
    CHECK_THROWS_AS(build_hnk(5, 3), PreconditionError);
  }

  TEST_CASE("case-(II) figure") {
    const auto fig = build_case2_figure(8, 7);
    const auto& g = fig.graph;
    CHECK(g.is_complete());
    CHECK(g.c() == turan_number(8, 5) + 1);
    CHECK(oracle::rainbow_cliques(g, 7).empty());
    // Not H_{8,5}: the three intra-pair edges do not share one color.
    std::set<std::int64_t> intra;
    for (const auto& part : fig.meta.parts)
      if (part.size() == 2) intra.insert(color_value(*g.color(part[0], part[1])));
    CHECK(intra.size() == 3);
    CHECK_THROWS_AS(build_case2_figure(9, 7), PreconditionError);
  }

  TEST_CASE("recolored G_1") {
    for (int n = 7; n <= 12; ++n) {
      const auto g = build_recolored_g1(n).graph;
      std::int64_t sum = 0;
      for (Vertex v = 0; v < n; ++v) sum += oracle::color_degree(g, v);
      CHECK(sum >= oracle::binomial(n + 1, 2));
      CHECK(oracle::rainbow_triangles(g).size() == 1);
    }
    CHECK_THROWS_AS(build_recolored_g1(6), PreconditionError);
  }
}
