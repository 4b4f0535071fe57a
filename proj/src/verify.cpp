#include "prodpart/verify.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>

#include "prodpart/counting.hpp"
#include "prodpart/oracle.hpp"
#include "prodpart/parallel.hpp"

namespace prodpart {

namespace {

// Collects per-n outcomes into one result, keeping the smallest failing n.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void record(bool ok, const std::string& detail) {
    ++result_.cases;
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.detail = detail;
    }
  }

  PropertyResult result() const { return result_; }

 private:
  PropertyResult result_;
};

std::string show(std::uint64_t n, const std::string& lhs, const std::string& rhs) {
  return "n=" + std::to_string(n) + ": " + lhs + " != " + rhs;
}

}  // namespace

std::vector<PropertyResult> verify_oracle(std::uint64_t max_n, unsigned jobs) {
  constexpr std::array relations{Relation::less, Relation::at_most, Relation::equal,
                                 Relation::at_least, Relation::greater};
  struct Outcome {
    CountRow row;
    std::array<BigCount, 5> oracle{};
  };
  const auto outcomes = parallel_map(1, max_n, jobs, [&](std::uint64_t n) {
    Outcome o;
    o.row = count_row(n);
    for (std::size_t i = 0; i < relations.size(); ++i) o.oracle[i] = oracle_count(n, relations[i]);
    return o;
  });

  std::vector<Tally> tallies;
  for (auto rel : relations) {
    tallies.emplace_back(std::string("formula p_") + relation_symbol(rel) +
                         " = brute-force enumeration");
  }
  Tally all("formula p(n) = part-by-part table");
  Tally consistent("row invariants (p_< + p_= = p_<=, complements sum to p(n), p_= >= 1)");

  for (const auto& o : outcomes) {
    const auto& r = o.row;
    const std::array<BigCount, 5> formula{to_big(r.p_less), to_big(r.p_leq), to_big(r.p_eq),
                                          r.p_geq, r.p_greater};
    for (std::size_t i = 0; i < relations.size(); ++i) {
      const BigCount& expected = o.oracle[i];
      tallies[i].record(formula[i] == expected,
                        show(r.n, formula[i].get_str(), expected.get_str()));
    }
    const BigCount dp = count_all_partitions(r.n);
    all.record(r.p_all == dp, show(r.n, r.p_all.get_str(), dp.get_str()));
    consistent.record(row_is_consistent(r), "n=" + std::to_string(r.n));
  }

  std::vector<PropertyResult> out;
  for (const auto& t : tallies) out.push_back(t.result());
  out.push_back(all.result());
  out.push_back(consistent.result());
  return out;
}

PropertyResult verify_factorizations(std::uint64_t max_n, unsigned jobs) {
  const auto pairs = parallel_map(1, max_n, jobs, [](std::uint64_t n) {
    return std::pair{count_product_equal(n), count_factorizations(n, n)};
  });
  Tally tally("p_= = unordered factorization count");
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const auto& [formula, oracle] = pairs[n - 1];
    tally.record(formula == oracle, show(n, std::to_string(formula), std::to_string(oracle)));
  }
  return tally.result();
}

std::vector<PropertyResult> verify_identities(std::uint64_t max_n, std::uint64_t prime_limit,
                                              unsigned jobs) {
  // Index 0 is unused; values run to max_n + 1 for the shift identity.
  const auto pairs = parallel_map(1, max_n + 1, jobs, [](std::uint64_t n) {
    return std::pair{count_product_at_most(n), count_product_less(n)};
  });
  const auto leq = [&](std::uint64_t n) { return pairs[n - 1].first; };
  const auto less = [&](std::uint64_t n) { return pairs[n - 1].second; };
  const auto eq = [&](std::uint64_t n) { return checked_sub(leq(n), less(n)); };

  Tally shift("shift: p_<=(n) = p_<(n+1)");
  Tally recurrence("recurrence: p_<=(n) = p_=(n) + p_<=(n-1)");
  Tally cumulative("cumulative: p_<=(n) = sum_{m<=n} p_=(m)");
  Tally prime_step("prime step: p_<=(p) = p_<=(p-1) + 1");

  Count running = 0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    shift.record(leq(n) == less(n + 1),
                 show(n, std::to_string(leq(n)), std::to_string(less(n + 1))));
    if (n >= 2) {
      const Count rhs = checked_add(eq(n), leq(n - 1));
      recurrence.record(leq(n) == rhs, show(n, std::to_string(leq(n)), std::to_string(rhs)));
    }
    running = checked_add(running, eq(n));
    cumulative.record(leq(n) == running, show(n, std::to_string(leq(n)), std::to_string(running)));
    if (n <= prime_limit && is_prime(n)) {
      const Count rhs = checked_add(leq(n - 1), 1);
      prime_step.record(leq(n) == rhs, show(n, std::to_string(leq(n)), std::to_string(rhs)));
    }
  }
  return {shift.result(), recurrence.result(), cumulative.result(), prime_step.result()};
}

std::vector<PropertyResult> verify_propositions(std::uint64_t divisor_max_n,
                                                std::uint64_t prime_power_max_n, unsigned jobs) {
  if (divisor_max_n > 0 && partition_count(divisor_max_n) > to_big(default_enumeration_cap)) {
    throw CapExceeded("proposition 1 sweep would enumerate p(" + std::to_string(divisor_max_n) +
                      ") = " + partition_count(divisor_max_n).get_str() +
                      " partitions, above the cap of " + std::to_string(default_enumeration_cap));
  }
  struct Sweep {
    std::uint64_t partitions = 0;
    std::optional<std::string> failure;
    bool complete = true;
  };
  const auto sweeps = parallel_map(1, divisor_max_n, jobs, [](std::uint64_t n) {
    Sweep s;
    const BigCount target = to_big(n);
    s.partitions = for_each_partition(n, std::nullopt, [&](const Partition& p) {
      const bool predicted = verify_proposition1(p);
      const bool actual = p.product == target;
      if (predicted != actual && !s.failure) {
        std::string parts;
        for (auto a : p.parts) parts += (parts.empty() ? "" : "+") + std::to_string(a);
        s.failure = "n=" + std::to_string(n) + ": " + parts + " (product " +
                    p.product.get_str() + ") test says " + (predicted ? "true" : "false");
      }
    });
    s.complete = to_big(s.partitions) == partition_count(n);
    return s;
  });

  PropertyResult prop1;
  prop1.name = "proposition 1: parts divide n with matching prime exponents <=> product = n";
  Tally complete("enumeration visits exactly p(n) partitions");
  for (std::uint64_t n = 1; n <= divisor_max_n; ++n) {
    const auto& s = sweeps[n - 1];
    prop1.cases += s.partitions;
    if (s.failure && prop1.pass) {
      prop1.pass = false;
      prop1.detail = *s.failure;
    }
    complete.record(s.complete, "n=" + std::to_string(n) + ": visited " +
                                    std::to_string(s.partitions));
  }

  const auto counts = parallel_map(1, prime_power_max_n, jobs, [](std::uint64_t n) {
    return std::pair{prime_power_parts_count(n), prime_power_parts_oracle(n)};
  });
  Tally prop2("proposition 2: prod p(alpha_i) = prime-power factorizations with sum <= n");
  for (std::uint64_t n = 1; n <= prime_power_max_n; ++n) {
    const auto& [formula, oracle] = counts[n - 1];
    prop2.record(formula == oracle, show(n, std::to_string(formula), std::to_string(oracle)));
  }
  return {prop1, complete.result(), prop2.result()};
}

bool all_pass(const std::vector<PropertyResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

std::string render_results(const std::vector<PropertyResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "  [" << r.cases << " cases]";
    if (!r.pass) out << "  " << r.detail;
    out << '\n';
  }
  return out.str();
}

}  // namespace prodpart
