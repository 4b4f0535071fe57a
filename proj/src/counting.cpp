#include "prodpart/counting.hpp"

#include <stdexcept>
#include <string>

namespace prodpart {

const char* relation_symbol(Relation r) {
  switch (r) {
    case Relation::less: return "<";
    case Relation::at_most: return "<=";
    case Relation::equal: return "=";
    case Relation::at_least: return ">=";
    case Relation::greater: return ">";
  }
  return "?";
}

namespace {

// Walks i_1 <= i_2 <= ... <= i_{k-1} carrying the running product of the
// indices chosen so far.
class NestedFloorSum {
 public:
  NestedFloorSum(std::uint64_t n, std::uint64_t cap) : n_(n), cap_(cap) {}

  // `remaining` indices are still to be chosen, the next one starting at
  // `lower`. Its upper limit is floor((n / prefix)^(1 / (remaining + 1))).
  Count walk(unsigned remaining, std::uint64_t lower, std::uint64_t prefix) const {
    const std::uint64_t upper = integer_kth_root(n_ / prefix, remaining + 1);
    Count total = 0;
    if (remaining == 1) {
      for (std::uint64_t i = lower; i <= upper; ++i) {
        total = checked_add(total, last_term(prefix * i, i));
      }
      return total;
    }
    for (std::uint64_t i = lower; i <= upper; ++i) {
      total = checked_add(total, walk(remaining - 1, i, prefix * i));
    }
    return total;
  }

 private:
  // Choices of the final part i_k in [i_{k-1}, floor(cap / product)].
  Count last_term(std::uint64_t product, std::uint64_t last) const {
    const std::uint64_t q = cap_ / product;
    if (q + 1 < last) {
      throw std::logic_error("negative innermost term at n=" + std::to_string(n_));
    }
    const Count term = q + 1 - last;
    // i_{k-1}^2 * prefix <= n, so with cap = n every term counts i_k = i_{k-1}.
    if (cap_ == n_ && term == 0) {
      throw std::logic_error("zero innermost term with cap = n at n=" + std::to_string(n_));
    }
    return term;
  }

  std::uint64_t n_;
  std::uint64_t cap_;
};

Count nested_total(std::uint64_t n, std::uint64_t cap, Count leading) {
  const unsigned l = max_nonone_parts(n);
  const NestedFloorSum sum(n, cap);
  Count total = leading;
  for (unsigned k = 2; k <= l; ++k) {
    total = checked_add(total, sum.walk(k - 1, 2, 1));
  }
  return total;
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

}  // namespace

Count count_with_k_nonone(std::uint64_t n, unsigned k, std::uint64_t cap) {
  require_positive(n, "count_with_k_nonone");
  if (k < 2 || k > max_nonone_parts(n)) {
    throw std::invalid_argument("count_with_k_nonone: k=" + std::to_string(k) +
                                " outside [2, " + std::to_string(max_nonone_parts(n)) +
                                "] for n=" + std::to_string(n));
  }
  if (cap != n && cap + 1 != n) {
    throw std::invalid_argument("count_with_k_nonone: cap must be n or n - 1");
  }
  return NestedFloorSum(n, cap).walk(k - 1, 2, 1);
}

Count count_product_at_most(std::uint64_t n) {
  require_positive(n, "count_product_at_most");
  return nested_total(n, n, n);
}

Count count_product_less(std::uint64_t n) {
  require_positive(n, "count_product_less");
  return nested_total(n, n - 1, n - 1);
}

Count count_product_equal(std::uint64_t n) {
  return checked_sub(count_product_at_most(n), count_product_less(n));
}

BigCount count_product_at_least(std::uint64_t n) {
  BigCount out = partition_count(n) - to_big(count_product_less(n));
  return out;
}

BigCount count_product_greater(std::uint64_t n) {
  BigCount out = partition_count(n) - to_big(count_product_at_most(n));
  return out;
}

CountRow count_row(std::uint64_t n) {
  require_positive(n, "count_row");
  CountRow row;
  row.n = n;
  row.p_all = partition_count(n);
  row.p_leq = count_product_at_most(n);
  row.p_less = count_product_less(n);
  row.p_eq = checked_sub(row.p_leq, row.p_less);
  row.p_geq = row.p_all - to_big(row.p_less);
  row.p_greater = row.p_all - to_big(row.p_leq);
  return row;
}

bool row_is_consistent(const CountRow& row) {
  const BigCount less = to_big(row.p_less);
  const BigCount leq = to_big(row.p_leq);
  return less + to_big(row.p_eq) == leq && leq + row.p_greater == row.p_all &&
         less + row.p_geq == row.p_all && row.p_eq >= 1;
}

}  // namespace prodpart
