#pragma once

// Exact integer primitives: floor k-th roots, trial-division factorization,
// the unrestricted partition function p(n) and checked 64-bit counting.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "prodpart/errors.hpp"

namespace prodpart {

/// Unbounded non-negative count. p(n) leaves 64 bits behind at n = 417.
using BigCount = mpz_class;

/// Checked 64-bit count; arithmetic on it goes through checked_add/checked_mul.
using Count = std::uint64_t;

Count checked_add(Count a, Count b);
Count checked_sub(Count a, Count b);
Count checked_mul(Count a, Count b);

/// Narrows a BigCount; throws OverflowError if it does not fit.
Count to_count(const BigCount& value);

static_assert(sizeof(unsigned long) == sizeof(Count), "LP64 target expected");

inline BigCount to_big(Count value) {
  return BigCount{static_cast<unsigned long>(value)};
}

/// Largest r with r^k <= x. Pure integer arithmetic; k must be >= 1.
std::uint64_t integer_kth_root(std::uint64_t x, unsigned k);

/// l with 2^l <= n < 2^(l+1): the most non-one parts a partition of n can
/// carry while keeping its product <= n. Rejects n = 0.
unsigned max_nonone_parts(std::uint64_t n);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical decomposition n = prod prime^exponent, primes strictly increasing.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  /// Multiplies the factors back out (checked).
  std::uint64_t product() const;
};

/// Trial division up to sqrt(n). n = 1 yields no factors; n = 0 throws.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// p(n) via Euler's pentagonal recurrence. Values are memoized in a
/// process-wide table guarded for concurrent readers, so sweeping
/// p(0..N) costs a single pass.
BigCount partition_count(std::uint64_t n);

/// p(0), ..., p(max_n).
std::vector<BigCount> partition_counts(std::uint64_t max_n);

}  // namespace prodpart
