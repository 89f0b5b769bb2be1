#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/turan.hpp"

using namespace rainbow;

TEST_SUITE("turan") {
  TEST_CASE("closed forms match generated edge counts") {
    for (int n = 1; n <= 30; ++n)
      for (int k = 1; k <= n; ++k) {
        const auto t = turan_number(n, k);
        CHECK(t == oracle::turan_edges(n, k));
        CHECK(turan_number_alt(n, k) == t);
        if (n < 30) CHECK(turan_diff(n, k) == oracle::turan_edges(n + 1, k) - t);
      }
  }

  TEST_CASE("values used elsewhere") {
    CHECK(turan_number(11, 5) == 48);
    CHECK(turan_number(10, 5) == 40);
    CHECK(turan_number(8, 5) == 25);
    CHECK(turan_number(10, 4) == 37);
    CHECK(turan_number(9, 5) == 32);
    CHECK(turan_number(8, 4) == 24);
  }

  TEST_CASE("partition shape") {
    const auto p = turan_partition(11, 5);
    CHECK(p.p() == 2);
    CHECK(p.i() == 1);
    CHECK(p.sizes == std::vector<int>{3, 2, 2, 2, 2});
    CHECK_THROWS_AS(turan_partition(3, 4), PreconditionError);
    CHECK_THROWS_AS(turan_number(3, 0), PreconditionError);
  }
}
