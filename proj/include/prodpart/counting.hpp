#pragma once

// Counts of partitions of n classified by how the product of their parts
// compares with n.
//
// p_<=(n) and p_<(n) are evaluated with the explicit nested floor sum
//
//   p_<=(n) = n + sum_{k=2..l} sum_{i1=2}^{floor(n^(1/k))}
//                 sum_{i2=i1}^{floor((n/i1)^(1/(k-1)))} ...
//                 sum_{i_{k-1}=i_{k-2}}^{floor(sqrt(n/(i1...i_{k-2})))}
//                 ( floor(n / (i1...i_{k-1})) - i_{k-1} + 1 ),   2^l <= n < 2^(l+1)
//
// where the k-th summand counts partitions with exactly k parts >= 2.
// p_<(n) is the same sum with n - 1 in the final floor numerator and
// n - 1 as the leading term. Everything else is derived from those two and
// from p(n).

#include <cstdint>

#include "prodpart/arith.hpp"

namespace prodpart {

enum class Relation { less, at_most, equal, at_least, greater };

const char* relation_symbol(Relation r);

/// Partitions of n with exactly k parts >= 2 whose product is <= cap.
///
/// Requires 2 <= k <= max_nonone_parts(n) and cap in {n - 1, n}. Loop
/// bounds are always floor roots of n / prefix; only the innermost floor
/// uses cap.
Count count_with_k_nonone(std::uint64_t n, unsigned k, std::uint64_t cap);

/// p_<=(n): partitions of n whose product of parts is at most n.
Count count_product_at_most(std::uint64_t n);

/// p_<(n); zero for n = 1.
Count count_product_less(std::uint64_t n);

/// p_=(n) = p_<=(n) - p_<(n), the number of unordered factorizations of n.
Count count_product_equal(std::uint64_t n);

/// p_>=(n) = p(n) - p_<(n).
BigCount count_product_at_least(std::uint64_t n);

/// p_>(n) = p(n) - p_<=(n).
BigCount count_product_greater(std::uint64_t n);

struct CountRow {
  std::uint64_t n = 0;
  BigCount p_all;
  Count p_less = 0;
  Count p_leq = 0;
  Count p_eq = 0;
  BigCount p_geq;
  BigCount p_greater;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

CountRow count_row(std::uint64_t n);

/// The four consistency relations between the fields of a row.
bool row_is_consistent(const CountRow& row);

}  // namespace prodpart
