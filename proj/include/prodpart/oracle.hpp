#pragma once

// Brute-force ground truth. Nothing here shares code with the nested-sum
// evaluator in counting.hpp; it enumerates, it does not sum floors.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "prodpart/arith.hpp"
#include "prodpart/counting.hpp"

namespace prodpart {

/// A partition of n: parts in non-decreasing order, ones first.
struct Partition {
  std::vector<std::uint64_t> parts;
  std::uint64_t n = 0;
  BigCount product = 1;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Checks the Partition invariants (sorted, positive, sums to n, product matches).
bool is_well_formed(const Partition& p);

inline constexpr std::size_t default_enumeration_cap = 10'000'000;

using PartitionVisitor = std::function<void(const Partition&)>;

/// Streams the partitions of n whose product is <= bound (no bound: all of
/// them). Non-one parts are generated as non-decreasing multisets with
/// sum <= n and padded with ones, in lexicographic order of that multiset.
/// Returns how many were visited; throws CapExceeded past `cap`.
std::size_t for_each_partition(std::uint64_t n, std::optional<std::uint64_t> bound,
                               const PartitionVisitor& visit,
                               std::size_t cap = default_enumeration_cap);

std::vector<Partition> enumerate_product_bounded(std::uint64_t n, std::uint64_t bound,
                                                 std::size_t cap = default_enumeration_cap);

/// p(n) by the part-by-part table p(n) = sum over largest part. Independent
/// of the pentagonal recurrence in arith.hpp.
BigCount count_all_partitions(std::uint64_t n);

/// Partitions of n whose product stands in `rel` to n, by enumeration.
/// The >= and > sides are p(n) minus the enumerated complement, hence
/// unbounded like p(n) itself.
BigCount oracle_count(std::uint64_t n, Relation rel, std::size_t cap = default_enumeration_cap);

/// Multisets of integers in [2, max_factor] multiplying to m (m = 1 gives 1).
Count count_factorizations(std::uint64_t m, std::uint64_t max_factor);

/// True iff every part divides n and, for each prime p^a || n, the exponents
/// of p across the parts add up to exactly a.
bool verify_proposition1(const Partition& p);

/// prod p(alpha_i) over n = prod p_i^alpha_i: product-n partitions whose
/// non-one parts are all prime powers.
Count prime_power_parts_count(std::uint64_t n);

/// Same count by enumerating prime-power factorizations of n directly and
/// keeping those whose parts sum to at most n.
Count prime_power_parts_oracle(std::uint64_t n, std::size_t cap = default_enumeration_cap);

}  // namespace prodpart
