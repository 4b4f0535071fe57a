#include "prodpart/oeis.hpp"

#include <httplib.h>

#include <atomic>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "prodpart/counting.hpp"

namespace prodpart::oeis {

namespace fs = std::filesystem;

bool is_valid_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (char c : id.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool parse_index(std::string_view token, std::int64_t& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

bool parse_value(std::string_view token, BigCount& out) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) return false;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return out.set_str(std::string(token), 10) == 0;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FetchError(FetchError::Kind::cache_write, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

Series parse_bfile(std::string_view text, std::string id) {
  if (!is_valid_id(id)) {
    throw BFileError(BFileError::Kind::bad_id, 0, "invalid sequence id '" + id + "'");
  }
  Series series;
  series.id = std::move(id);
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    const auto tokens = split_whitespace(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    std::int64_t index = 0;
    BigCount value;
    if (tokens.size() != 2 || !parse_index(tokens[0], index) || !parse_value(tokens[1], value)) {
      throw BFileError(BFileError::Kind::malformed_line, line_no,
                       "line " + std::to_string(line_no) + ": expected 'index value', got '" +
                           std::string(line) + "'");
    }
    if (!series.values.emplace(index, std::move(value)).second) {
      throw BFileError(BFileError::Kind::duplicate_index, line_no,
                       "line " + std::to_string(line_no) + ": duplicate index " +
                           std::to_string(index));
    }
  }
  if (series.values.empty()) {
    throw BFileError(BFileError::Kind::empty, 0, "b-file for " + series.id + " has no terms");
  }
  series.min_index = series.values.begin()->first;
  series.max_index = series.values.rbegin()->first;
  const auto span = static_cast<std::uint64_t>(series.max_index - series.min_index) + 1;
  if (span != series.values.size()) {
    std::int64_t expect = series.min_index;
    for (const auto& [index, value] : series.values) {
      if (index != expect) break;
      ++expect;
    }
    throw BFileError(BFileError::Kind::gap, 0,
                     "b-file for " + series.id + " is missing index " + std::to_string(expect));
  }
  return series;
}

std::string render_bfile(const Series& series) {
  std::string out;
  for (const auto& [index, value] : series.values) {
    out += std::to_string(index);
    out += ' ';
    out += value.get_str();
    out += '\n';
  }
  return out;
}

std::string bfile_name(std::string_view id) {
  return "b" + std::string(id.substr(1)) + ".txt";
}

std::string bfile_url(std::string_view id) {
  return "https://oeis.org/" + std::string(id) + "/" + bfile_name(id);
}

HttpResponse default_http_get(const std::string& url) {
  const std::string host = "https://oeis.org";
  if (url.rfind(host, 0) != 0) {
    throw FetchError(FetchError::Kind::network, "refusing to fetch non-OEIS url " + url);
  }
  httplib::Client client(host);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(url.substr(host.size()));
  if (!res) {
    throw FetchError(FetchError::Kind::network,
                     "GET " + url + " failed: " + httplib::to_string(res.error()));
  }
  return {res->status, res->body};
}

HttpResponse offline_http_get(const std::string& url) {
  throw FetchError(FetchError::Kind::network, "offline: not fetching " + url);
}

std::string fetch_bfile(std::string_view id, const fs::path& cache_dir, const HttpGet& get) {
  if (!is_valid_id(id)) {
    throw FetchError(FetchError::Kind::bad_id, "invalid sequence id '" + std::string(id) + "'");
  }
  const fs::path target = cache_dir / bfile_name(id);
  std::error_code ec;
  if (fs::is_regular_file(target, ec)) return read_file(target);

  const std::string url = bfile_url(id);
  HttpResponse res = get(url);
  if (res.status != 200) {
    throw FetchError(FetchError::Kind::http_status,
                     "GET " + url + " returned HTTP " + std::to_string(res.status));
  }

  fs::create_directories(cache_dir, ec);
  if (ec) {
    throw FetchError(FetchError::Kind::cache_write,
                     "cannot create cache dir " + cache_dir.string() + ": " + ec.message());
  }
  static std::atomic<unsigned> counter{0};
  const fs::path temp = cache_dir / (bfile_name(id) + ".tmp." + std::to_string(::getpid()) + "." +
                                     std::to_string(counter++));
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << res.body;
    if (!out.flush()) {
      fs::remove(temp, ec);
      throw FetchError(FetchError::Kind::cache_write, "cannot write " + temp.string());
    }
  }
  fs::rename(temp, target, ec);
  if (ec) {
    fs::remove(temp, ec);
    throw FetchError(FetchError::Kind::cache_write, "cannot move b-file into " + target.string());
  }
  return std::move(res.body);
}

fs::path resolve_cache_dir(const std::optional<fs::path>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(cache_env_var); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "prodpart" / "oeis";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "prodpart" / "oeis";
  }
  return fs::temp_directory_path() / "prodpart-oeis";
}

Series load_series(std::string_view id, const fs::path& data_dir, const fs::path& cache_dir,
                   const HttpGet& get) {
  if (!is_valid_id(id)) {
    throw FetchError(FetchError::Kind::bad_id, "invalid sequence id '" + std::string(id) + "'");
  }
  const fs::path vendored = data_dir / bfile_name(id);
  std::error_code ec;
  if (!data_dir.empty() && fs::is_regular_file(vendored, ec)) {
    return parse_bfile(read_file(vendored), std::string(id));
  }
  return parse_bfile(fetch_bfile(id, cache_dir, get), std::string(id));
}

const char* quantity_name(Quantity q) {
  switch (q) {
    case Quantity::p_eq: return "p_eq";
    case Quantity::p_leq: return "p_leq";
    case Quantity::p_less: return "p_less";
    case Quantity::p_geq: return "p_geq";
    case Quantity::p_greater: return "p_greater";
  }
  return "?";
}

const std::vector<std::string>& supported_ids() {
  static const std::vector<std::string> ids{"A001055", "A096276", "A319005", "A114324"};
  return ids;
}

Quantity quantity_for(std::string_view id) {
  if (id == "A001055") return Quantity::p_eq;
  if (id == "A096276") return Quantity::p_leq;
  if (id == "A319005") return Quantity::p_geq;
  if (id == "A114324") return Quantity::p_greater;
  throw UnsupportedSequence("unsupported sequence '" + std::string(id) +
                            "'; supported: A001055, A096276, A319005, A114324");
}

BigCount quantity_value(Quantity q, std::uint64_t n) {
  switch (q) {
    case Quantity::p_eq: return to_big(count_product_equal(n));
    case Quantity::p_leq: return to_big(count_product_at_most(n));
    case Quantity::p_less: return to_big(count_product_less(n));
    case Quantity::p_geq: return count_product_at_least(n);
    case Quantity::p_greater: return count_product_greater(n);
  }
  throw std::logic_error("quantity_value: unknown quantity");
}

IndexRange available_range(const Series& series) {
  return {std::max<std::int64_t>(series.min_index, 1), series.max_index};
}

VerificationReport cross_check(const Series& series, Quantity q, IndexRange range) {
  const std::string span = std::to_string(range.first) + ".." + std::to_string(range.last);
  if (range.first > range.last) throw RangeError("empty index range " + span);
  if (range.first < 1) throw RangeError("index range " + span + " starts below 1");
  if (!series.contains(range.first) || !series.contains(range.last)) {
    throw RangeError("index range " + span + " is outside " + series.id + "'s indices " +
                     std::to_string(series.min_index) + ".." + std::to_string(series.max_index));
  }

  const bool shifted_less = series.id == "A096276" && q == Quantity::p_leq;
  VerificationReport report;
  report.series_id = series.id;
  report.checked_range = range;
  report.comparisons.push_back(std::string(quantity_name(q)) + "(n)");
  if (shifted_less) report.comparisons.emplace_back("p_less(n+1)");

  for (std::int64_t i = range.first; i <= range.last; ++i) {
    const auto n = static_cast<std::uint64_t>(i);
    const BigCount& expected = series.values.at(i);
    BigCount computed = quantity_value(q, n);
    if (computed != expected) {
      report.mismatches.push_back({i, expected, std::move(computed), report.comparisons[0]});
    }
    if (shifted_less) {
      BigCount shifted = to_big(count_product_less(n + 1));
      if (shifted != expected) {
        report.mismatches.push_back({i, expected, std::move(shifted), report.comparisons[1]});
      }
    }
  }
  report.pass = report.mismatches.empty();
  return report;
}

std::string render_report(const VerificationReport& report, std::size_t max_listed) {
  std::ostringstream out;
  const auto count = report.checked_range.last - report.checked_range.first + 1;
  for (const auto& comparison : report.comparisons) {
    std::size_t misses = 0;
    for (const auto& m : report.mismatches) misses += m.comparison == comparison ? 1 : 0;
    out << report.series_id << " vs " << comparison << " on " << report.checked_range.first
        << ".." << report.checked_range.last << ": " << (misses == 0 ? "PASS" : "FAIL") << " ("
        << count << " indices, " << misses << " mismatches)\n";
  }
  std::size_t listed = 0;
  for (const auto& m : report.mismatches) {
    if (listed++ == max_listed) {
      out << "  ... " << report.mismatches.size() - max_listed << " more\n";
      break;
    }
    out << "  n=" << m.index << " [" << m.comparison << "]: expected " << m.expected.get_str()
        << ", computed " << m.computed.get_str() << '\n';
  }
  return out.str();
}

}  // namespace prodpart::oeis
