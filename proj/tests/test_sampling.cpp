#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/sampling.hpp"
#include "rainbow/turan.hpp"

using namespace rainbow;

TEST_SUITE("sampling") {
  TEST_CASE("streams are reproducible and distinct") {
    auto a = make_rng(5, 1), b = make_rng(5, 1), c = make_rng(5, 2);
    CHECK(random_colored_graph(a, 9, 0.5, 4) == random_colored_graph(b, 9, 0.5, 4));
    CHECK(a() != c());
  }

  TEST_CASE("random graphs respect their parameters") {
    auto rng = make_rng(6, 0);
    for (int i = 0; i < 200; ++i) {
      const auto g = random_colored_graph(rng, 8, 0.5, 3);
      CHECK(g.c() <= 3);
      const auto d = random_oriented_graph(rng, 8, 0.7);
      for (const auto& arc : d.arcs()) CHECK_FALSE(d.has_arc(arc.head, arc.tail));
    }
    CHECK(random_colored_graph(rng, 7, 1.0, 2).is_complete());
    CHECK(random_oriented_graph(rng, 7, 1.0).arc_count() == 21);
    CHECK_THROWS_AS(random_colored_graph(rng, 3, 0.5, 0), PreconditionError);
  }

  TEST_CASE("relabeling preserves the statistics") {
    auto rng = make_rng(7, 0);
    for (int i = 0; i < 200; ++i) {
      const auto g = random_colored_graph(rng, 9, 0.6, 5);
      const auto perm = random_permutation(rng, 9);
      CHECK(std::set<Vertex>(perm.begin(), perm.end()).size() == 9);
      const auto h = relabel_vertices(g, perm);
      CHECK(h.m() == g.m());
      CHECK(h.c() == g.c());
      CHECK(oracle::rainbow_triangles(h).size() == oracle::rainbow_triangles(g).size());
      CHECK(oracle::rainbow_cliques(h, 4).size() == oracle::rainbow_cliques(g, 4).size());
      for (Vertex v = 0; v < 9; ++v)
        CHECK(oracle::color_degree(h, perm[static_cast<std::size_t>(v)]) == oracle::color_degree(g, v));
    }
    const std::vector<Vertex> short_perm{0, 1};
    CHECK_THROWS_AS(relabel_vertices(EdgeColoredGraph(3), short_perm), PreconditionError);
  }

  TEST_CASE("descent samples land on target with the reported clique count") {
    for (auto [n, k, complete] : {std::tuple{6, 4, false}, std::tuple{7, 5, true}, std::tuple{8, 6, true}}) {
      const std::int64_t target = oracle::binomial(n, 2) + turan_number(n, k - 2) + 1;
      RainbowCliqueDescent descent(n, k, target, complete, 11);
      int got = 0;
      for (int i = 0; i < 100; ++i) {
        const auto s = descent.next();
        if (!s) continue;
        ++got;
        CHECK(s->graph.m() + s->graph.c() == target);
        CHECK(s->rainbow_cliques == static_cast<std::int64_t>(oracle::rainbow_cliques(s->graph, k).size()));
        if (complete) CHECK(s->graph.is_complete());
      }
      CHECK(got > 50);
    }
  }

  TEST_CASE("descent draws are reproducible") {
    RainbowCliqueDescent a(8, 6, 54, true, 3), b(8, 6, 54, true, 3);
    for (int i = 0; i < 20; ++i) {
      const auto x = a.next(), y = b.next();
      REQUIRE(x.has_value() == y.has_value());
      if (x) CHECK(x->graph == y->graph);
    }
  }

  TEST_CASE("descent preconditions") {
    CHECK_THROWS_AS(RainbowCliqueDescent(12, 6, 100, true, 0), PreconditionError);
    CHECK_THROWS_AS(RainbowCliqueDescent(5, 6, 15, true, 0), PreconditionError);
    CHECK_THROWS_AS(RainbowCliqueDescent(6, 4, 31, true, 0), PreconditionError);  // > 2 C(6,2)
    CHECK_THROWS_AS(RainbowCliqueDescent(6, 4, 15, true, 0), PreconditionError);  // complete needs c >= 1
  }
}
