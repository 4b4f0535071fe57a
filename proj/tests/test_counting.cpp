#include <doctest.h>

#include "prodpart/counting.hpp"
#include "support/brute.hpp"

using namespace prodpart;

TEST_SUITE("counting") {

TEST_CASE("count_with_k_nonone on named values") {
  CHECK(count_with_k_nonone(7, 2, 7) == 2);
  CHECK(count_with_k_nonone(4, 2, 4) == 1);
  CHECK(count_with_k_nonone(4, 2, 3) == 0);
}

TEST_CASE("count_with_k_nonone matches enumeration by number of non-one parts") {
  for (std::uint64_t n = 4; n <= 45; ++n) {
    for (unsigned k = 2; k <= max_nonone_parts(n); ++k) {
      for (std::uint64_t cap : {n - 1, n}) {
        REQUIRE_MESSAGE(count_with_k_nonone(n, k, cap) == brute::with_k_nonone(n, k, cap),
                        "n=" << n << " k=" << k << " cap=" << cap);
      }
    }
  }
}

TEST_CASE("count_with_k_nonone rejects arguments outside its domain") {
  CHECK_THROWS_AS(count_with_k_nonone(0, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_with_k_nonone(7, 1, 7), std::invalid_argument);
  CHECK_THROWS_AS(count_with_k_nonone(7, 3, 7), std::invalid_argument);
  CHECK_THROWS_AS(count_with_k_nonone(7, 2, 5), std::invalid_argument);
  CHECK_THROWS_AS(count_with_k_nonone(7, 2, 8), std::invalid_argument);
}

TEST_CASE("single-relation counts on named values") {
  CHECK(count_product_at_most(1) == 1);
  CHECK(count_product_at_most(4) == 5);
  CHECK(count_product_at_most(7) == 9);

  CHECK(count_product_less(1) == 0);
  CHECK(count_product_less(4) == 3);
  CHECK(count_product_less(8) == 9);

  CHECK(count_product_equal(12) == 4);
  CHECK(count_product_equal(97) == 1);
  CHECK(count_product_equal(8) == 3);
  CHECK(count_product_equal(1) == 1);

  CHECK(count_product_at_least(7) == 7);
  CHECK(count_product_at_least(1) == 1);
  CHECK(count_product_at_least(4) == 2);

  CHECK(count_product_greater(1) == 0);
  CHECK(count_product_greater(7) == 6);
  CHECK(count_product_greater(4) == 0);

  CHECK_THROWS_AS(count_product_at_most(0), std::invalid_argument);
  CHECK_THROWS_AS(count_product_less(0), std::invalid_argument);
}

TEST_CASE("count_row") {
  const auto row = [](std::uint64_t n, int all, Count less, Count leq, Count eq, int geq,
                      int greater) {
    return CountRow{n, all, less, leq, eq, geq, greater};
  };
  CHECK(count_row(7) == row(7, 15, 8, 9, 1, 7, 6));
  CHECK(count_row(1) == row(1, 1, 0, 1, 1, 1, 0));
  CHECK(count_row(12) == row(12, 77, 17, 21, 4, 60, 56));
  CHECK_THROWS_AS(count_row(0), std::invalid_argument);
}

TEST_CASE("every count agrees with full enumeration for n <= 60") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    const auto expected = brute::classify(n);
    const auto row = count_row(n);
    INFO("n=" << n);
    REQUIRE(row.p_all == to_big(expected.all));
    REQUIRE(row.p_less == expected.less);
    REQUIRE(row.p_leq == expected.leq);
    REQUIRE(row.p_eq == expected.eq);
    REQUIRE(row.p_geq == to_big(expected.geq));
    REQUIRE(row.p_greater == to_big(expected.greater));
  }
}

TEST_CASE("row invariants hold and a broken row is detected") {
  for (std::uint64_t n = 1; n <= 500; ++n) REQUIRE(row_is_consistent(count_row(n)));
  auto row = count_row(30);
  row.p_eq += 1;
  CHECK_FALSE(row_is_consistent(row));
}

TEST_CASE("shift, recurrence and cumulative identities for n <= 10^4") {
  Count running = 0;
  Count previous_leq = 0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const Count leq = count_product_at_most(n);
    const Count eq = count_product_equal(n);
    running += eq;
    INFO("n=" << n);
    REQUIRE(leq == count_product_less(n + 1));
    REQUIRE(leq == running);
    if (n >= 2) REQUIRE(leq == eq + previous_leq);
    if (is_prime(n)) REQUIRE(leq == previous_leq + 1);
    previous_leq = leq;
  }
}

TEST_CASE("large n stays exact and fast") {
  CHECK(count_product_equal(1000000) == 1043);
  CHECK(count_product_equal(1024) == 42);
  CHECK(count_product_equal(720) == 98);
}

TEST_CASE("relation symbols") {
  CHECK(std::string(relation_symbol(Relation::at_most)) == "<=");
  CHECK(std::string(relation_symbol(Relation::greater)) == ">");
}

}
