#pragma once

// OEIS b-file ingestion and cross-checking of computed counts.
//
// Supported sequences and what they are checked against:
//   A001055  p_=(n)    (unordered factorizations)
//   A096276  p_<=(n), and also p_<(n + 1) at the same index
//   A319005  p_>=(n)
//   A114324  p_>(n)

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "prodpart/arith.hpp"
#include "prodpart/errors.hpp"

namespace prodpart::oeis {

inline constexpr const char* cache_env_var = "PRODPART_OEIS_CACHE";

/// Matches 'A' followed by exactly six digits.
bool is_valid_id(std::string_view id);

struct Series {
  std::string id;
  std::map<std::int64_t, BigCount> values;
  std::int64_t min_index = 0;
  std::int64_t max_index = -1;

  bool contains(std::int64_t index) const { return index >= min_index && index <= max_index; }
  friend bool operator==(const Series&, const Series&) = default;
};

class BFileError : public std::runtime_error {
 public:
  enum class Kind { empty, malformed_line, duplicate_index, gap, bad_id };

  BFileError(Kind kind, std::size_t line, const std::string& what)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  Kind kind() const { return kind_; }
  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

/// Parses "index value" lines; '#' lines and blank lines are skipped.
/// Indices must be unique and contiguous.
Series parse_bfile(std::string_view text, std::string id);

std::string render_bfile(const Series& series);

/// "b001055.txt" for "A001055".
std::string bfile_name(std::string_view id);
std::string bfile_url(std::string_view id);

class FetchError : public std::runtime_error {
 public:
  enum class Kind { bad_id, network, http_status, cache_write };

  FetchError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct HttpResponse {
  int status = 0;
  std::string body;
};

/// Performs one GET. Throws FetchError(network) when no response arrives.
using HttpGet = std::function<HttpResponse(const std::string& url)>;

/// HTTPS GET against oeis.org.
HttpResponse default_http_get(const std::string& url);

/// An HttpGet that always fails; used for --offline.
HttpResponse offline_http_get(const std::string& url);

/// Returns the cached b-file for `id` if present; otherwise downloads it
/// once, stores it in `cache_dir` (temp file + rename) and returns it.
std::string fetch_bfile(std::string_view id, const std::filesystem::path& cache_dir,
                        const HttpGet& get = default_http_get);

/// Flag, then $PRODPART_OEIS_CACHE, then $XDG_CACHE_HOME/prodpart/oeis,
/// then $HOME/.cache/prodpart/oeis.
std::filesystem::path resolve_cache_dir(const std::optional<std::filesystem::path>& flag);

/// Looks in `data_dir` for a vendored copy first, then defers to fetch_bfile.
Series load_series(std::string_view id, const std::filesystem::path& data_dir,
                   const std::filesystem::path& cache_dir, const HttpGet& get = default_http_get);

enum class Quantity { p_eq, p_leq, p_less, p_geq, p_greater };

const char* quantity_name(Quantity q);

class UnsupportedSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ids of the four sequences this tool knows how to check.
const std::vector<std::string>& supported_ids();

/// Quantity that the given sequence tabulates; throws UnsupportedSequence.
Quantity quantity_for(std::string_view id);

/// The computed value of `q` at n (n >= 1).
BigCount quantity_value(Quantity q, std::uint64_t n);

struct IndexRange {
  std::int64_t first = 1;
  std::int64_t last = 0;

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

struct Mismatch {
  std::int64_t index = 0;
  BigCount expected;
  BigCount computed;
  std::string comparison;
};

struct VerificationReport {
  std::string series_id;
  IndexRange checked_range;
  std::vector<std::string> comparisons;
  std::vector<Mismatch> mismatches;
  bool pass = false;
};

/// Compares `q` at every index in `range` against the series. For A096276
/// checked as p_leq, p_less(n + 1) is compared as well. Throws RangeError if
/// the range is empty, starts below 1 or leaves the series' index range.
VerificationReport cross_check(const Series& series, Quantity q, IndexRange range);

/// Overlap of [1, inf) with the series' indices.
IndexRange available_range(const Series& series);

std::string render_report(const VerificationReport& report, std::size_t max_listed = 20);

}  // namespace prodpart::oeis
