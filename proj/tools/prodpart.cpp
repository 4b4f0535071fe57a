// prodpart: counts partitions of n by how the product of their parts
// compares with n.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 I/O or network error, 4 arithmetic overflow.

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodpart/counting.hpp"
#include "prodpart/oeis.hpp"
#include "prodpart/oracle.hpp"
#include "prodpart/parallel.hpp"
#include "prodpart/records.hpp"
#include "prodpart/verify.hpp"

namespace {

using namespace prodpart;

enum Exit : int { ok = 0, verification_failed = 1, usage = 2, io = 3, overflow = 4 };

#ifndef PRODPART_DEFAULT_DATA_DIR
#define PRODPART_DEFAULT_DATA_DIR "data/oeis"
#endif

struct ComputeArgs {
  std::string range;
  bool all = false;
  std::string quantities;
  std::string format = "table";
  unsigned jobs = default_jobs();
  bool timing = false;
};

int run_compute(const ComputeArgs& args) {
  const auto range = parse_range(args.range);
  const auto format = parse_format(args.format);
  if (!format) throw std::invalid_argument("unknown format '" + args.format + "'");
  const auto columns = (args.all || args.quantities.empty())
                           ? std::vector<Column>(all_columns.begin(), all_columns.end())
                           : parse_columns(args.quantities);
  const auto records = parallel_map(range.first, range.last, args.jobs, [&](std::uint64_t n) {
    return make_record(n, columns, args.timing);
  });
  std::cout << render_records(records, columns, *format, args.timing);
  return ok;
}

struct VerifyArgs {
  std::uint64_t max_n = 0;
  std::string mode;
  unsigned jobs = default_jobs();
};

int run_verify(const VerifyArgs& args) {
  std::vector<PropertyResult> results;
  if (args.mode == "oracle") {
    results = verify_oracle(args.max_n, args.jobs);
    results.push_back(verify_factorizations(args.max_n, args.jobs));
  } else if (args.mode == "identities") {
    results = verify_identities(args.max_n, args.max_n, args.jobs);
  } else {
    results = verify_propositions(args.max_n, args.max_n, args.jobs);
  }
  std::cout << render_results(results);
  return all_pass(results) ? ok : verification_failed;
}

struct OeisArgs {
  std::string id;
  std::string range;
  std::optional<std::filesystem::path> cache_dir;
  std::filesystem::path data_dir = PRODPART_DEFAULT_DATA_DIR;
  bool offline = false;
  std::size_t max_listed = 20;
};

int run_oeis_check(const OeisArgs& args) {
  if (!oeis::is_valid_id(args.id)) {
    throw std::invalid_argument("invalid sequence id '" + args.id + "'");
  }
  const auto quantity = oeis::quantity_for(args.id);
  const auto series =
      oeis::load_series(args.id, args.data_dir, oeis::resolve_cache_dir(args.cache_dir),
                        args.offline ? oeis::HttpGet(oeis::offline_http_get)
                                     : oeis::HttpGet(oeis::default_http_get));
  oeis::IndexRange range = oeis::available_range(series);
  if (!args.range.empty()) {
    const auto r = parse_range(args.range);
    range = {static_cast<std::int64_t>(r.first), static_cast<std::int64_t>(r.last)};
  }
  const auto report = oeis::cross_check(series, quantity, range);
  std::cout << oeis::render_report(report, args.max_listed);
  return report.pass ? ok : verification_failed;
}

struct BenchArgs {
  std::uint64_t max_n = 0;
  std::uint64_t step = 0;
  std::uint64_t oracle_limit = 300;
  unsigned repeats = 3;
  std::string format = "csv";
};

template <class Fn>
std::int64_t best_nanos(unsigned repeats, Fn&& fn) {
  std::int64_t best = -1;
  for (unsigned i = 0; i < repeats; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (best < 0 || ns < best) best = ns;
  }
  return best;
}

int run_bench(const BenchArgs& args) {
  const auto format = parse_format(args.format);
  if (!format) throw std::invalid_argument("unknown format '" + args.format + "'");
  const std::uint64_t step = args.step ? args.step : std::max<std::uint64_t>(1, args.max_n / 10);

  struct Row {
    std::uint64_t n;
    Count p_leq;
    std::int64_t formula_nanos;
    std::optional<std::int64_t> oracle_nanos;
  };
  std::vector<Row> rows;
  for (std::uint64_t n = std::min(step, args.max_n); n <= args.max_n; n += step) {
    Row row{n, 0, 0, std::nullopt};
    row.formula_nanos = best_nanos(args.repeats, [&] { row.p_leq = count_product_at_most(n); });
    if (n <= args.oracle_limit) {
      row.oracle_nanos = best_nanos(args.repeats, [&] {
        if (oracle_count(n, Relation::at_most) != to_big(row.p_leq)) {
          throw std::logic_error("formula and oracle disagree at n=" + std::to_string(n));
        }
      });
    }
    rows.push_back(row);
    if (n > args.max_n - step) break;
  }

  const auto oracle_cell = [](const Row& r) {
    return r.oracle_nanos ? std::to_string(*r.oracle_nanos) : std::string{};
  };
  switch (*format) {
    case Format::csv:
      std::cout << "n,p_leq,formula_nanos,oracle_nanos\n";
      for (const auto& r : rows) {
        std::cout << r.n << ',' << r.p_leq << ',' << r.formula_nanos << ',' << oracle_cell(r)
                  << '\n';
      }
      break;
    case Format::jsonl:
      for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["n"] = r.n;
        j["p_leq"] = r.p_leq;
        j["formula_nanos"] = r.formula_nanos;
        if (r.oracle_nanos) j["oracle_nanos"] = *r.oracle_nanos;
        std::cout << j.dump() << '\n';
      }
      break;
    case Format::table:
      std::cout << "n\tp_leq\tformula_nanos\toracle_nanos\n";
      for (const auto& r : rows) {
        std::cout << r.n << '\t' << r.p_leq << '\t' << r.formula_nanos << '\t' << oracle_cell(r)
                  << '\n';
      }
      break;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count partitions of n by the product of their parts"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* compute_cmd = app.add_subcommand("compute", "Counts for n or a range a..b");
  compute_cmd->add_option("n", compute.range, "n or inclusive range a..b")->required();
  compute_cmd->add_flag("--all", compute.all, "Emit all six counts (default)");
  compute_cmd->add_option("--quantities", compute.quantities,
                          "Comma-separated subset of p_all,p_less,p_leq,p_eq,p_geq,p_greater");
  compute_cmd->add_option("--format", compute.format, "table, csv or jsonl")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}));
  compute_cmd->add_option("--jobs", compute.jobs, "Worker threads")->check(CLI::PositiveNumber);
  compute_cmd->add_flag("--timing", compute.timing, "Add per-n wall time in nanoseconds");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check the formula against invariants");
  verify_cmd->add_option("max_n", verify.max_n, "Largest n to check")
      ->required()
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--mode", verify.mode, "oracle, identities or propositions")
      ->required()
      ->check(CLI::IsMember({"oracle", "identities", "propositions"}));
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);

  OeisArgs oeis_args;
  auto* oeis_cmd = app.add_subcommand("oeis-check", "Compare against an OEIS b-file");
  oeis_cmd->add_option("id", oeis_args.id, "A001055, A096276, A319005 or A114324")->required();
  oeis_cmd->add_option("range", oeis_args.range, "Indices a..b (default: whole b-file from 1)");
  oeis_cmd->add_option("--cache-dir", oeis_args.cache_dir,
                       std::string("Download cache (default: $") + oeis::cache_env_var +
                           ", then the user cache dir)");
  oeis_cmd->add_option("--data-dir", oeis_args.data_dir, "Directory of vendored b-files")
      ->capture_default_str();
  oeis_cmd->add_flag("--offline", oeis_args.offline, "Never touch the network");
  oeis_cmd->add_option("--max-listed", oeis_args.max_listed, "Mismatches to print");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the formula against brute force");
  bench_cmd->add_option("max_n", bench.max_n, "Largest n")->required()->check(CLI::PositiveNumber);
  bench_cmd->add_option("--step", bench.step, "Sampling step (default max_n/10)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--oracle-limit", bench.oracle_limit, "Largest n timed by brute force")
      ->capture_default_str();
  bench_cmd->add_option("--repeats", bench.repeats, "Timing repetitions, best is kept")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--format", bench.format, "csv, jsonl or table")
      ->check(CLI::IsMember({"table", "csv", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*compute_cmd) return run_compute(compute);
    if (*verify_cmd) return run_verify(verify);
    if (*oeis_cmd) return run_oeis_check(oeis_args);
    if (*bench_cmd) return run_bench(bench);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "; try a smaller max_n\n";
    return usage;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return overflow;
  } catch (const oeis::FetchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == oeis::FetchError::Kind::bad_id ? usage : io;
  } catch (const oeis::BFileError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return io;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return verification_failed;
  }
  return usage;
}
