#pragma once

// Property suites run by `prodpart verify` and by the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

namespace prodpart {

struct PropertyResult {
  std::string name;
  bool pass = true;
  std::uint64_t cases = 0;
  std::string detail;  // first counterexample, empty on success
};

/// Each of the six counts against brute-force enumeration for n in 1..max_n.
std::vector<PropertyResult> verify_oracle(std::uint64_t max_n, unsigned jobs);

/// p_=(n) against the recursive factorization counter for n in 1..max_n.
PropertyResult verify_factorizations(std::uint64_t max_n, unsigned jobs);

/// Shift, recurrence and cumulative identities for n <= max_n, and the
/// prime step for primes <= min(prime_limit, max_n).
std::vector<PropertyResult> verify_identities(std::uint64_t max_n, std::uint64_t prime_limit,
                                              unsigned jobs);

/// Proposition 1 over every partition of n <= divisor_max_n (plus the
/// enumeration's completeness against p(n)), and the prime-power-parts
/// count against its enumeration for n <= prime_power_max_n.
std::vector<PropertyResult> verify_propositions(std::uint64_t divisor_max_n,
                                                std::uint64_t prime_power_max_n, unsigned jobs);

bool all_pass(const std::vector<PropertyResult>& results);

std::string render_results(const std::vector<PropertyResult>& results);

}  // namespace prodpart
