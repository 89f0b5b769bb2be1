#include "doctest.h"
#include "json.hpp"
#include "oracles.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/subgraphs.hpp"
#include "rainbow/verify.hpp"

using namespace rainbow;

namespace {

VerifyGrid small(TheoremId id) {
  auto grid = default_grid(id);
  grid.samples = std::min<std::int64_t>(grid.samples, 40);
  if (id == TheoremId::T6 || id == TheoremId::L3 || id == TheoremId::L4 || id == TheoremId::L5) grid.n_max = 8;
  if (id == TheoremId::T5 || id == TheoremId::P1) grid.n_max = 7;
  return grid;
}

nlohmann::json comparable(const VerificationReport& r) {
  auto doc = nlohmann::json::parse(to_json(r));
  doc.erase("wall_ms");
  doc["grid"].erase("jobs");
  return doc;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("theorem ids") {
    for (auto id : kAllTheorems) CHECK(parse_theorem_id(theorem_name(id)) == id);
    CHECK(parse_theorem_id("t5") == TheoremId::T5);
    CHECK_FALSE(parse_theorem_id("T7").has_value());
  }

  TEST_CASE("every statement holds on a small grid") {
    for (auto id : kAllTheorems) {
      CAPTURE(theorem_name(id));
      const auto r = verify_theorem(id, small(id));
      CHECK(r.passed());
      CHECK(r.counterexample_count == 0);
      CHECK(r.instances > 0);
      CHECK(r.premise_hits > 0);
    }
  }

  TEST_CASE("reports do not depend on the thread count") {
    for (auto id : {TheoremId::T2, TheoremId::T6, TheoremId::L2}) {
      auto one = small(id), two = small(id);
      two.jobs = 2;
      CHECK(comparable(verify_theorem(id, one)) == comparable(verify_theorem(id, two)));
    }
  }

  TEST_CASE("exhaustive instance counts") {
    VerifyGrid grid;
    grid.n_min = 4;
    grid.n_max = 4;
    grid.k_min = 1;
    grid.k_max = 1;
    const auto r = verify_theorem(TheoremId::T1, grid);
    CHECK(r.instances == oracle::bell_numbers(6)[6]);
    grid.include_noncomplete = true;
    CHECK(verify_theorem(TheoremId::T1, grid).instances == oracle::bell_numbers(7)[7]);
  }

  TEST_CASE("tightness witnesses") {
    for (int n = 3; n <= 9; ++n) {
      const auto g = find_tightness_witness(TheoremId::T1, n, 0);
      CHECK(g.m() + g.c() == triangle_threshold(n) - 1);
      CHECK(oracle::rainbow_triangles(g).empty());
    }
    for (int k = 1; k <= 3; ++k) {
      const auto g = find_tightness_witness(TheoremId::T2, 3 * k + 3, k);
      CHECK(g.m() + g.c() == triangle_threshold(g.n()) + k - 1);
      CHECK(static_cast<int>(oracle::rainbow_triangles(g).size()) == k);
    }
    const auto h = find_tightness_witness(TheoremId::T5, 9, 6);
    CHECK(h.m() + h.c() == clique_threshold(9, 6) - 1);
    CHECK(oracle::rainbow_cliques(h, 6).empty());
    CHECK_THROWS_AS(find_tightness_witness(TheoremId::L2, 5, 1), PreconditionError);

    const auto r = verify_theorem(TheoremId::T1, small(TheoremId::T1));
    REQUIRE_FALSE(r.witnesses.empty());
    for (const auto& w : r.witnesses) CHECK(w.sharp);
  }

  TEST_CASE("recolored witness for the color-degree version") {
    CHECK_THROWS_AS(recolor_witness_colordeg(6), PreconditionError);
    for (int n = 7; n <= 12; ++n) {
      const auto g = recolor_witness_colordeg(n);
      std::int64_t sum = 0;
      for (Vertex v = 0; v < n; ++v) sum += oracle::color_degree(g, v);
      CHECK(sum >= triangle_threshold(n));
      CHECK(oracle::rainbow_triangles(g).size() == 1);
    }
  }

  TEST_CASE("report rendering") {
    const auto r = verify_theorem(TheoremId::L1, small(TheoremId::L1));
    const auto doc = nlohmann::json::parse(to_json(r));
    CHECK(doc["theorem"] == "L1");
    CHECK(doc["counterexample_count"] == 0);
    CHECK(to_table(r).find("L1") != std::string::npos);
  }
}
