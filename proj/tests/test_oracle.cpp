#include <doctest.h>

#include <algorithm>

#include "prodpart/oracle.hpp"
#include "support/brute.hpp"

using namespace prodpart;

namespace {

Partition make(std::uint64_t n, std::vector<std::uint64_t> parts) {
  Partition p;
  p.n = n;
  p.parts = std::move(parts);
  for (auto a : p.parts) p.product *= static_cast<unsigned long>(a);
  return p;
}

std::vector<std::uint64_t> ones_then(std::uint64_t ones, std::vector<std::uint64_t> rest) {
  std::vector<std::uint64_t> out(ones, 1);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("enumerate_product_bounded lists partitions in lexicographic order") {
  const auto four = enumerate_product_bounded(4, 4);
  const std::vector<std::vector<std::uint64_t>> expected{
      {1, 1, 1, 1}, {1, 1, 2}, {2, 2}, {1, 3}, {4}};
  REQUIRE(four.size() == expected.size());
  for (std::size_t i = 0; i < four.size(); ++i) CHECK(four[i].parts == expected[i]);

  const auto one = enumerate_product_bounded(1, 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts == std::vector<std::uint64_t>{1});
  CHECK(one[0].product == 1);

  CHECK(enumerate_product_bounded(7, 7).size() == 9);
  CHECK(enumerate_product_bounded(7, 0).empty());
}

TEST_CASE("enumeration output is sound and duplicate-free") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    for (std::uint64_t bound : {std::uint64_t{1}, n - (n > 1), n, 2 * n, n * n}) {
      auto all = enumerate_product_bounded(n, bound);
      for (const auto& p : all) {
        REQUIRE(is_well_formed(p));
        REQUIRE(p.n == n);
        REQUIRE(p.product <= to_big(bound));
      }
      std::vector<std::vector<std::uint64_t>> parts;
      for (const auto& p : all) parts.push_back(p.parts);
      REQUIRE(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
      std::sort(parts.begin(), parts.end());
      REQUIRE(std::adjacent_find(parts.begin(), parts.end()) == parts.end());
    }
  }
}

TEST_CASE("unbounded enumeration is complete against p(n) and the test generator") {
  for (std::uint64_t n = 1; n <= 40; ++n) {
    std::vector<std::vector<std::uint64_t>> ours;
    for_each_partition(n, std::nullopt, [&](const Partition& p) { ours.push_back(p.parts); });
    REQUIRE(to_big(ours.size()) == partition_count(n));

    std::vector<std::vector<std::uint64_t>> theirs;
    brute::each_partition(n, [&](const brute::Parts& parts) {
      theirs.emplace_back(parts.rbegin(), parts.rend());
    });
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    REQUIRE(ours == theirs);
  }
}

TEST_CASE("enumeration cap turns runaway input into an error") {
  CHECK_THROWS_AS(for_each_partition(40, std::nullopt, [](const Partition&) {}, 1000), CapExceeded);
  CHECK_THROWS_AS(oracle_count(300, Relation::at_most, 10), CapExceeded);
  CHECK_THROWS_AS(for_each_partition(0, 1, [](const Partition&) {}), std::invalid_argument);
}

TEST_CASE("oracle_count") {
  CHECK(oracle_count(7, Relation::at_most) == 9);
  CHECK(oracle_count(12, Relation::equal) == 4);
  CHECK(oracle_count(1, Relation::less) == 0);
  CHECK(oracle_count(7, Relation::at_least) == 7);
  CHECK(oracle_count(7, Relation::greater) == 6);
  for (std::uint64_t n = 1; n <= 50; ++n) {
    const auto r = brute::classify(n);
    INFO("n=" << n);
    REQUIRE(oracle_count(n, Relation::less) == to_big(r.less));
    REQUIRE(oracle_count(n, Relation::at_most) == to_big(r.leq));
    REQUIRE(oracle_count(n, Relation::equal) == to_big(r.eq));
    REQUIRE(oracle_count(n, Relation::at_least) == to_big(r.geq));
    REQUIRE(oracle_count(n, Relation::greater) == to_big(r.greater));
  }
  // p(500) exceeds 64 bits; the complement side must not overflow.
  CHECK(oracle_count(500, Relation::greater) ==
        partition_count(500) - oracle_count(500, Relation::at_most));
}

TEST_CASE("count_all_partitions") {
  CHECK(count_all_partitions(0) == 1);
  CHECK(count_all_partitions(7) == 15);
  CHECK(count_all_partitions(200) == BigCount("3972999029388"));
}

TEST_CASE("count_factorizations") {
  CHECK(count_factorizations(12, 12) == 4);
  CHECK(count_factorizations(1, 1) == 1);
  CHECK(count_factorizations(30, 30) == 5);
  CHECK(count_factorizations(12, 3) == 1);  // only 2*2*3
  CHECK(count_factorizations(1000000, 1000000) == 1043);
  CHECK_THROWS_AS(count_factorizations(0, 5), std::invalid_argument);
}

TEST_CASE("verify_proposition1 on named partitions") {
  CHECK(verify_proposition1(make(12, ones_then(4, {2, 6}))));
  CHECK_FALSE(verify_proposition1(make(12, {2, 2, 8})));
  CHECK_FALSE(verify_proposition1(make(5, {1, 1, 1, 1, 1})));
  CHECK(verify_proposition1(make(1, {1})));
  // Divisors of 12 whose prime exponents overshoot.
  CHECK_FALSE(verify_proposition1(make(12, ones_then(2, {4, 6}))));
  CHECK_FALSE(verify_proposition1(make(12, ones_then(6, {2, 4}))));
}

TEST_CASE("proposition 1 iff holds for every partition of n <= 30") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const BigCount target = to_big(n);
    for_each_partition(n, std::nullopt, [&](const Partition& p) {
      REQUIRE(verify_proposition1(p) == (p.product == target));
    });
  }
}

TEST_CASE("prime_power_parts_count and its enumeration oracle") {
  CHECK(prime_power_parts_count(12) == 2);
  CHECK(prime_power_parts_count(1) == 1);
  CHECK(prime_power_parts_count(64) == 11);
  CHECK(prime_power_parts_count(2 * 2 * 3 * 3 * 3 * 5) == 2 * 3 * 1);

  CHECK(prime_power_parts_oracle(12) == 2);
  CHECK(prime_power_parts_oracle(8) == 3);
  CHECK(prime_power_parts_oracle(97) == 1);
  CHECK(prime_power_parts_oracle(1) == 1);

  for (std::uint64_t n = 1; n <= 500; ++n) {
    REQUIRE_MESSAGE(prime_power_parts_count(n) == prime_power_parts_oracle(n), "n=" << n);
  }
  CHECK_THROWS_AS(prime_power_parts_oracle(1024, 5), CapExceeded);
}

}
