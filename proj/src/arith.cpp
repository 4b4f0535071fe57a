#include "prodpart/arith.hpp"

#include <bit>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace prodpart {

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("64-bit count overflow in addition");
  }
  return out;
}

Count checked_sub(Count a, Count b) {
  if (b > a) {
    throw OverflowError("64-bit count underflow in subtraction");
  }
  return a - b;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("64-bit count overflow in multiplication");
  }
  return out;
}

Count to_count(const BigCount& value) {
  if (sgn(value) < 0 || !value.fits_ulong_p()) {
    throw OverflowError("value " + value.get_str() + " does not fit a 64-bit count");
  }
  return value.get_ui();
}

namespace {

// base^k <= x, without ever forming a product larger than x.
bool power_at_most(std::uint64_t base, unsigned k, std::uint64_t x) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (acc > x / base) return false;
    acc *= base;
  }
  return true;
}

}  // namespace

std::uint64_t integer_kth_root(std::uint64_t x, unsigned k) {
  if (k == 0) throw std::invalid_argument("integer_kth_root: k must be >= 1");
  if (k == 1 || x < 2) return x;
  if (k >= 64) return 1;

  // lo^k <= x < hi^k throughout; 2^ceil(bits/k) is already too large.
  const unsigned bits = static_cast<unsigned>(std::bit_width(x));
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << ((bits + k - 1) / k);
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (power_at_most(mid, k, x)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

unsigned max_nonone_parts(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("max_nonone_parts: n must be >= 1");
  return static_cast<unsigned>(std::bit_width(n)) - 1;
}

std::uint64_t Factorization::product() const {
  Count out = 1;
  for (const auto& f : factors) {
    for (unsigned i = 0; i < f.exponent; ++i) out = checked_mul(out, f.prime);
  }
  return out;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  out.n = n;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest / d; ++d) {
    if (rest % d != 0) continue;
    unsigned e = 0;
    while (rest % d == 0) {
      rest /= d;
      ++e;
    }
    out.factors.push_back({d, e});
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace {

class PartitionTable {
 public:
  BigCount at(std::uint64_t n) {
    {
      std::shared_lock lock(mutex_);
      if (n < values_.size()) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return values_[n];
  }

  std::vector<BigCount> prefix(std::uint64_t max_n) {
    {
      std::shared_lock lock(mutex_);
      if (max_n < values_.size()) {
        return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(max_n + 1)};
      }
    }
    std::unique_lock lock(mutex_);
    extend(max_n);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(max_n + 1)};
  }

 private:
  // p(m) = sum_{j>=1} (-1)^(j+1) [p(m - j(3j-1)/2) + p(m - j(3j+1)/2)]
  void extend(std::uint64_t n) {
    if (values_.empty()) values_.emplace_back(1);
    values_.reserve(n + 1);
    for (std::uint64_t m = values_.size(); m <= n; ++m) {
      BigCount sum = 0;
      for (std::uint64_t j = 1;; ++j) {
        const std::uint64_t g1 = j * (3 * j - 1) / 2;
        if (g1 > m) break;
        const std::uint64_t g2 = j * (3 * j + 1) / 2;
        if (j % 2 == 1) {
          sum += values_[m - g1];
          if (g2 <= m) sum += values_[m - g2];
        } else {
          sum -= values_[m - g1];
          if (g2 <= m) sum -= values_[m - g2];
        }
      }
      values_.push_back(std::move(sum));
    }
  }

  std::shared_mutex mutex_;
  std::vector<BigCount> values_;
};

PartitionTable& partition_table() {
  static PartitionTable table;
  return table;
}

}  // namespace

BigCount partition_count(std::uint64_t n) { return partition_table().at(n); }

std::vector<BigCount> partition_counts(std::uint64_t max_n) {
  return partition_table().prefix(max_n);
}

}  // namespace prodpart
