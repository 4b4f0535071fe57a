#include "prodpart/oracle.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace prodpart {

bool is_well_formed(const Partition& p) {
  BigCount product = 1;
  std::uint64_t sum = 0;
  std::uint64_t previous = 1;
  for (auto part : p.parts) {
    if (part < previous) return false;
    previous = part;
    sum += part;
    product *= static_cast<unsigned long>(part);
  }
  return sum == p.n && product == p.product;
}

namespace {

class BoundedEnumerator {
 public:
  BoundedEnumerator(std::uint64_t n, std::optional<std::uint64_t> bound,
                    const PartitionVisitor& visit, std::size_t cap)
      : n_(n), bound_(bound), visit_(visit), cap_(cap) {}

  std::size_t run() {
    if (bound_ && *bound_ == 0) return 0;
    descend(2, 0, 1);
    return visited_;
  }

 private:
  void descend(std::uint64_t lower, std::uint64_t sum, std::uint64_t product) {
    emit(sum);
    for (std::uint64_t a = lower; a <= n_ - sum; ++a) {
      if (bound_ && product > *bound_ / a) break;
      nonone_.push_back(a);
      descend(a, sum + a, bound_ ? product * a : 1);
      nonone_.pop_back();
    }
  }

  void emit(std::uint64_t sum) {
    if (++visited_ > cap_) {
      throw CapExceeded("partition enumeration for n=" + std::to_string(n_) +
                        " exceeded cap of " + std::to_string(cap_));
    }
    current_.n = n_;
    current_.parts.assign(n_ - sum, 1);
    current_.parts.insert(current_.parts.end(), nonone_.begin(), nonone_.end());
    current_.product = 1;
    for (auto a : nonone_) current_.product *= static_cast<unsigned long>(a);
    visit_(current_);
  }

  std::uint64_t n_;
  std::optional<std::uint64_t> bound_;
  const PartitionVisitor& visit_;
  std::size_t cap_;
  std::size_t visited_ = 0;
  std::vector<std::uint64_t> nonone_;
  Partition current_;
};

std::vector<std::uint64_t> divisors_descending(std::uint64_t m) {
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  std::reverse(small.begin(), small.end());
  large.insert(large.end(), small.begin(), small.end());
  return large;
}

bool is_prime_power(std::uint64_t d) { return d >= 2 && factorize(d).factors.size() == 1; }

}  // namespace

std::size_t for_each_partition(std::uint64_t n, std::optional<std::uint64_t> bound,
                               const PartitionVisitor& visit, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("for_each_partition: n must be >= 1");
  return BoundedEnumerator(n, bound, visit, cap).run();
}

std::vector<Partition> enumerate_product_bounded(std::uint64_t n, std::uint64_t bound,
                                                 std::size_t cap) {
  std::vector<Partition> out;
  for_each_partition(n, bound, [&](const Partition& p) { out.push_back(p); }, cap);
  return out;
}

BigCount count_all_partitions(std::uint64_t n) {
  std::vector<BigCount> ways(n + 1, BigCount{0});
  ways[0] = 1;
  for (std::uint64_t part = 1; part <= n; ++part) {
    for (std::uint64_t s = part; s <= n; ++s) ways[s] += ways[s - part];
  }
  return ways[n];
}

BigCount oracle_count(std::uint64_t n, Relation rel, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("oracle_count: n must be >= 1");
  const auto bounded = [&](std::uint64_t bound) -> Count {
    return for_each_partition(n, bound, [](const Partition&) {}, cap);
  };
  switch (rel) {
    case Relation::less:
      return to_big(bounded(n - 1));
    case Relation::at_most:
      return to_big(bounded(n));
    case Relation::equal: {
      Count hits = 0;
      const BigCount target = to_big(n);
      for_each_partition(
          n, n, [&](const Partition& p) { hits += (p.product == target) ? 1 : 0; }, cap);
      return to_big(hits);
    }
    case Relation::at_least:
      return count_all_partitions(n) - to_big(bounded(n - 1));
    case Relation::greater:
      return count_all_partitions(n) - to_big(bounded(n));
  }
  throw std::logic_error("oracle_count: unknown relation");
}

Count count_factorizations(std::uint64_t m, std::uint64_t max_factor) {
  if (m == 0 || max_factor == 0) {
    throw std::invalid_argument("count_factorizations: arguments must be >= 1");
  }
  if (m == 1) return 1;
  Count total = 0;
  for (auto d : divisors_descending(m)) {
    if (d < 2) break;
    if (d > max_factor) continue;
    total = checked_add(total, count_factorizations(m / d, d));
  }
  return total;
}

bool verify_proposition1(const Partition& p) {
  if (p.n == 0) return false;
  std::map<std::uint64_t, unsigned> exponents;
  for (auto part : p.parts) {
    if (p.n % part != 0) return false;
    for (const auto& f : factorize(part).factors) exponents[f.prime] += f.exponent;
  }
  const auto target = factorize(p.n).factors;
  if (exponents.size() != target.size()) return false;
  return std::all_of(target.begin(), target.end(), [&](const PrimePower& f) {
    auto it = exponents.find(f.prime);
    return it != exponents.end() && it->second == f.exponent;
  });
}

Count prime_power_parts_count(std::uint64_t n) {
  Count total = 1;
  for (const auto& f : factorize(n).factors) {
    total = checked_mul(total, to_count(partition_count(f.exponent)));
  }
  return total;
}

namespace {

class PrimePowerFactorizations {
 public:
  PrimePowerFactorizations(std::uint64_t n, std::size_t cap) : n_(n), cap_(cap) {}

  Count count(std::uint64_t rest, std::uint64_t max_part, std::uint64_t sum) {
    if (++visited_ > cap_) {
      throw CapExceeded("prime-power factorization search for n=" + std::to_string(n_) +
                        " exceeded cap of " + std::to_string(cap_));
    }
    if (rest == 1) return sum <= n_ ? 1 : 0;
    Count total = 0;
    for (auto d : divisors_descending(rest)) {
      if (d < 2) break;
      if (d > max_part || !is_prime_power(d)) continue;
      total = checked_add(total, count(rest / d, d, sum + d));
    }
    return total;
  }

 private:
  std::uint64_t n_;
  std::size_t cap_;
  std::size_t visited_ = 0;
};

}  // namespace

Count prime_power_parts_oracle(std::uint64_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("prime_power_parts_oracle: n must be >= 1");
  return PrimePowerFactorizations(n, cap).count(n, n, 0);
}

}  // namespace prodpart
