#include <string>

#include "doctest.h"
#include "rainbow/constructions.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/io.hpp"
#include "rainbow/sampling.hpp"

using namespace rainbow;

namespace {

int parse_error_line(std::string_view text) {
  try {
    io::parse_edgelist(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_SUITE("io") {
  TEST_CASE("edge list parsing") {
    const auto g = io::parse_edgelist("# triangle\n3 3\n0 1 5\n\n1 2 6\n0 2 7\n");
    CHECK(g.n() == 3);
    CHECK(g.c() == 3);
    CHECK(g.color(0, 2) == ColorId{7});
    CHECK(io::to_edgelist(g) == "3 3\n0 1 5\n0 2 7\n1 2 6\n");
    CHECK(io::parse_edgelist("0 0\n").n() == 0);
  }

  TEST_CASE("edge list errors carry line numbers") {
    CHECK(parse_error_line("3 2\n0 1 1\n") == 2);        // too few edges, reported at the last line
    CHECK(parse_error_line("3 1\n0 1 1\n1 2 1\n") == 3);  // too many
    CHECK(parse_error_line("3 1\n0 3 1\n") == 2);         // u, v >= n
    CHECK(parse_error_line("3 1\n1 0 1\n") == 2);         // u > v
    CHECK(parse_error_line("3 2\n0 1 1\n# dup\n0 1 2\n") == 4);
    CHECK(parse_error_line("3 1\n0 1\n") == 2);
    CHECK(parse_error_line("3 1\n0 1 x\n") == 2);
    CHECK(parse_error_line("") == 1);
  }

  TEST_CASE("JSON round trip and validation") {
    const auto g = build_gk(7, 2).graph;
    const auto text = io::to_json(g);
    CHECK(io::parse_json(text) == g);
    CHECK(io::parse_graph(text) == g);
    CHECK(io::to_edgelist(io::parse_json(text)) == io::to_edgelist(g));
    CHECK_THROWS_AS(io::parse_json("{\"n\": 2, \"edges\": [[0, 2, 1]]}"), InvalidInput);
    CHECK_THROWS_AS(io::parse_json("{\"n\": 2, \"edges\": [[0, 1, 1], [1, 0, 2]]}"), InvalidInput);
    CHECK_THROWS_AS(io::parse_json("{\"n\": 2}"), InvalidInput);
    CHECK_THROWS_AS(io::parse_json("not json"), InvalidInput);
  }

  TEST_CASE("edgelist to json to edgelist is byte exact") {
    auto rng = make_rng(5, 0);
    for (int trial = 0; trial < 40; ++trial) {
      const auto g = random_colored_graph(rng, 1 + trial % 10, 0.5, 6);
      const auto text = io::to_edgelist(g);
      CHECK(io::to_edgelist(io::parse_json(io::to_json(io::parse_edgelist(text)))) == text);
    }
  }

  TEST_CASE("digraph text") {
    const auto d = io::parse_digraph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(2, 0));
    CHECK(io::to_digraph_text(d) == "3 3\n0 1\n1 2\n2 0\n");
    CHECK_THROWS_AS(io::parse_digraph("2 2\n0 1\n1 0\n"), ParseError);
    CHECK_THROWS_AS(io::parse_digraph("2 1\n0 0\n"), ParseError);
  }

  TEST_CASE("DOT export uses the fixed palette") {
    const EdgeColoredGraph g(3, {{0, 1, ColorId{10}}, {1, 2, ColorId{20}}, {0, 2, ColorId{30}}});
    const auto dot = io::to_dot(g);
    for (std::size_t i = 0; i < 3; ++i) CHECK(dot.find(std::string(io::kDotPalette[i])) != std::string::npos);
    CHECK(dot.find(std::string(io::kDotPalette[3])) == std::string::npos);
    CHECK(dot.find("label=\"20\"") != std::string::npos);
    CHECK(io::to_dot(g) == dot);
  }
}
