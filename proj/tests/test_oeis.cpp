#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "prodpart/counting.hpp"
#include "prodpart/oeis.hpp"
#include "prodpart/oracle.hpp"

using namespace prodpart;
using namespace prodpart::oeis;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int serial = 0;
    path = fs::temp_directory_path() /
           ("prodpart-test-" + std::to_string(::getpid()) + "-" + std::to_string(serial++));
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

void write(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

// Synthetic A001055-shaped file built from the factorization counter, not
// from OEIS; it exercises the plumbing only.
std::string synthetic_factorization_bfile(std::int64_t last) {
  std::string text = "# synthetic\n";
  for (std::int64_t n = 1; n <= last; ++n) {
    text += std::to_string(n) + " " +
            std::to_string(count_factorizations(static_cast<std::uint64_t>(n),
                                                static_cast<std::uint64_t>(n))) +
            "\n";
  }
  return text;
}

BFileError::Kind parse_error_kind(std::string_view text) {
  try {
    parse_bfile(text, "A001055");
  } catch (const BFileError& e) {
    return e.kind();
  }
  FAIL("expected a BFileError");
  return BFileError::Kind::empty;
}

}  // namespace

TEST_SUITE("oeis") {

TEST_CASE("sequence id pattern") {
  CHECK(is_valid_id("A001055"));
  CHECK_FALSE(is_valid_id("bogus"));
  CHECK_FALSE(is_valid_id("A1055"));
  CHECK_FALSE(is_valid_id("a001055"));
  CHECK_FALSE(is_valid_id("A0010550"));
  CHECK(bfile_name("A096276") == "b096276.txt");
  CHECK(bfile_url("A001055") == "https://oeis.org/A001055/b001055.txt");
}

TEST_CASE("parse_bfile accepts well-formed files") {
  const auto s = parse_bfile("1 1\n2 1\n3 1\n4 2\n", "A001055");
  CHECK(s.id == "A001055");
  CHECK(s.min_index == 1);
  CHECK(s.max_index == 4);
  CHECK(s.values.at(4) == 2);
  for (std::uint64_t n = 1; n <= 4; ++n) {
    CHECK(s.values.at(static_cast<std::int64_t>(n)) == to_big(count_factorizations(n, n)));
  }

  const auto c = parse_bfile("# comment\n1 1\n", "A001055");
  CHECK(c.values.size() == 1);

  const auto crlf = parse_bfile("# A header\r\n\r\n0 1\r\n1   7\t\r\n2 123456789012345678901234567890\r\n",
                                "A000001");
  CHECK(crlf.min_index == 0);
  CHECK(crlf.values.at(2) == BigCount("123456789012345678901234567890"));
}

TEST_CASE("parse_bfile rejects broken files") {
  CHECK(parse_error_kind("1 1\n1 2\n") == BFileError::Kind::duplicate_index);
  CHECK(parse_error_kind("1 1\n3 2\n") == BFileError::Kind::gap);
  CHECK(parse_error_kind("") == BFileError::Kind::empty);
  CHECK(parse_error_kind("# only comments\n\n") == BFileError::Kind::empty);
  CHECK(parse_error_kind("1\n") == BFileError::Kind::malformed_line);
  CHECK(parse_error_kind("1 2 3\n") == BFileError::Kind::malformed_line);
  CHECK(parse_error_kind("x 2\n") == BFileError::Kind::malformed_line);
  CHECK(parse_error_kind("1 2e5\n") == BFileError::Kind::malformed_line);
  CHECK_THROWS_AS(parse_bfile("1 1\n", "bogus"), BFileError);
  try {
    parse_bfile("1 1\n2 1\nbad line\n", "A001055");
  } catch (const BFileError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("render_bfile then parse_bfile round-trips random series") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Series s;
    s.id = "A114324";
    s.min_index = static_cast<std::int64_t>(rng() % 5);
    s.max_index = s.min_index + static_cast<std::int64_t>(rng() % 200);
    for (auto i = s.min_index; i <= s.max_index; ++i) {
      BigCount v = static_cast<unsigned long>(rng());
      v *= static_cast<unsigned long>(rng());
      if (rng() % 10 == 0) v = -v;
      s.values.emplace(i, v);
    }
    REQUIRE(parse_bfile(render_bfile(s), s.id) == s);
  }
}

TEST_CASE("fetch_bfile uses the cache and the network exactly once") {
  TempDir dir;
  int calls = 0;
  const HttpGet fake = [&](const std::string& url) {
    ++calls;
    CHECK(url == "https://oeis.org/A001055/b001055.txt");
    return HttpResponse{200, "1 1\n2 1\n"};
  };
  CHECK(fetch_bfile("A001055", dir.path, fake) == "1 1\n2 1\n");
  CHECK(calls == 1);
  CHECK(fs::is_regular_file(dir.path / "b001055.txt"));
  // Warm cache: no network at all.
  CHECK(fetch_bfile("A001055", dir.path, offline_http_get) == "1 1\n2 1\n");
  CHECK(calls == 1);
  for (const auto& entry : fs::directory_iterator(dir.path)) {
    CHECK(entry.path().filename() == "b001055.txt");
  }
}

TEST_CASE("fetch_bfile error paths") {
  TempDir dir;
  const auto kind_of = [&](auto&& fn) {
    try {
      fn();
    } catch (const FetchError& e) {
      return e.kind();
    }
    FAIL("expected a FetchError");
    return FetchError::Kind::network;
  };
  CHECK(kind_of([&] { fetch_bfile("A001055", dir.path / "cold", offline_http_get); }) ==
        FetchError::Kind::network);
  CHECK(kind_of([&] { fetch_bfile("bogus", dir.path, offline_http_get); }) ==
        FetchError::Kind::bad_id);
  CHECK(kind_of([&] {
          fetch_bfile("A001055", dir.path, [](const std::string&) { return HttpResponse{404, ""}; });
        }) == FetchError::Kind::http_status);
  write(dir.path / "blocker", "not a directory");
  CHECK(kind_of([&] {
          fetch_bfile("A001055", dir.path / "blocker" / "sub",
                      [](const std::string&) { return HttpResponse{200, "1 1\n"}; });
        }) == FetchError::Kind::cache_write);
  CHECK_FALSE(fs::exists(dir.path / "cold" / "b001055.txt"));
}

TEST_CASE("resolve_cache_dir precedence") {
  const char* saved = std::getenv(cache_env_var);
  const std::string saved_value = saved ? saved : "";
  ::setenv(cache_env_var, "/tmp/from-env", 1);
  CHECK(resolve_cache_dir(fs::path("/tmp/from-flag")) == "/tmp/from-flag");
  CHECK(resolve_cache_dir(std::nullopt) == "/tmp/from-env");
  ::unsetenv(cache_env_var);
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(resolve_cache_dir(std::nullopt) == "/tmp/xdg/prodpart/oeis");
  ::unsetenv("XDG_CACHE_HOME");
  if (saved) ::setenv(cache_env_var, saved_value.c_str(), 1);
}

TEST_CASE("load_series prefers a vendored file over the cache") {
  TempDir data;
  TempDir cache;
  write(data.path / "b001055.txt", "1 1\n2 1\n3 1\n");
  write(cache.path / "b001055.txt", "1 1\n");
  CHECK(load_series("A001055", data.path, cache.path, offline_http_get).max_index == 3);
  fs::remove(data.path / "b001055.txt");
  CHECK(load_series("A001055", data.path, cache.path, offline_http_get).max_index == 1);
  CHECK_THROWS_AS(load_series("A319005", data.path, cache.path, offline_http_get), FetchError);
}

TEST_CASE("sequence to quantity mapping") {
  CHECK(quantity_for("A001055") == Quantity::p_eq);
  CHECK(quantity_for("A096276") == Quantity::p_leq);
  CHECK(quantity_for("A319005") == Quantity::p_geq);
  CHECK(quantity_for("A114324") == Quantity::p_greater);
  CHECK_THROWS_AS(quantity_for("A000001"), UnsupportedSequence);
  CHECK(supported_ids().size() == 4);
}

TEST_CASE("cross_check passes on agreeing data and reports corruption") {
  auto series = parse_bfile(synthetic_factorization_bfile(1000), "A001055");
  const auto good = cross_check(series, Quantity::p_eq, {1, 1000});
  CHECK(good.pass);
  CHECK(good.mismatches.empty());

  series.values[7] += 1;
  const auto bad = cross_check(series, Quantity::p_eq, {1, 10});
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.mismatches.size() == 1);
  CHECK(bad.mismatches[0].index == 7);
  CHECK(bad.mismatches[0].computed == 1);
  CHECK(bad.mismatches[0].expected == 2);
  CHECK(render_report(bad).find("FAIL") != std::string::npos);
  CHECK(cross_check(series, Quantity::p_eq, {8, 10}).pass);
}

TEST_CASE("cross_check checks A096276 against p_leq(n) and p_less(n+1)") {
  std::string text;
  for (std::uint64_t n = 1; n <= 200; ++n) {
    text += std::to_string(n) + " " + std::to_string(count_product_at_most(n)) + "\n";
  }
  auto series = parse_bfile(text, "A096276");
  const auto report = cross_check(series, Quantity::p_leq, available_range(series));
  CHECK(report.pass);
  CHECK(report.comparisons == std::vector<std::string>{"p_leq(n)", "p_less(n+1)"});

  series.values[50] -= 1;
  const auto bad = cross_check(series, Quantity::p_leq, {1, 200});
  REQUIRE(bad.mismatches.size() == 2);
  CHECK(bad.mismatches[0].comparison == "p_leq(n)");
  CHECK(bad.mismatches[1].comparison == "p_less(n+1)");
}

TEST_CASE("cross_check range errors") {
  const auto series = parse_bfile("0 1\n1 1\n2 1\n3 1\n", "A001055");
  CHECK(available_range(series) == IndexRange{1, 3});
  CHECK_THROWS_AS(cross_check(series, Quantity::p_eq, {3, 2}), RangeError);
  CHECK_THROWS_AS(cross_check(series, Quantity::p_eq, {0, 2}), RangeError);
  CHECK_THROWS_AS(cross_check(series, Quantity::p_eq, {1, 4}), RangeError);
  CHECK_THROWS_AS(cross_check(series, Quantity::p_eq, {10, 20}), RangeError);
}

TEST_CASE("cross_check on big quantities") {
  std::string geq;
  std::string greater;
  for (std::uint64_t n = 1; n <= 450; ++n) {
    geq += std::to_string(n) + " " + BigCount(partition_count(n) - oracle_count(n, Relation::less)).get_str() + "\n";
    greater += std::to_string(n) + " " + oracle_count(n, Relation::greater).get_str() + "\n";
  }
  CHECK(cross_check(parse_bfile(geq, "A319005"), Quantity::p_geq, {1, 450}).pass);
  CHECK(cross_check(parse_bfile(greater, "A114324"), Quantity::p_greater, {1, 450}).pass);
}

}
