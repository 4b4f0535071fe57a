#pragma once

// Output records for the CLI and their table / CSV / JSON-lines renderings.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "prodpart/arith.hpp"

namespace prodpart {

enum class Column { p_all, p_less, p_leq, p_eq, p_geq, p_greater };

inline constexpr std::array<Column, 6> all_columns{Column::p_all, Column::p_less, Column::p_leq,
                                                   Column::p_eq,  Column::p_geq,  Column::p_greater};

const char* column_name(Column c);
std::optional<Column> parse_column(std::string_view name);

/// Parses a comma-separated selector such as "p_leq,p_eq" into canonical
/// column order. Throws std::invalid_argument on unknown names.
std::vector<Column> parse_columns(std::string_view list);

struct OutputRecord {
  std::uint64_t n = 0;
  std::optional<BigCount> p_all;
  std::optional<Count> p_less;
  std::optional<Count> p_leq;
  std::optional<Count> p_eq;
  std::optional<BigCount> p_geq;
  std::optional<BigCount> p_greater;
  std::optional<std::int64_t> nanos;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

/// Computes only what the selected columns need; p(n) is skipped unless
/// p_all, p_geq or p_greater is requested.
OutputRecord make_record(std::uint64_t n, const std::vector<Column>& columns, bool timed);

enum class Format { table, csv, jsonl };

std::optional<Format> parse_format(std::string_view name);

std::string render_records(const std::vector<OutputRecord>& records,
                           const std::vector<Column>& columns, Format format, bool timed);

/// Reads back CSV written by render_records; the header decides which
/// fields are populated.
std::vector<OutputRecord> parse_csv(std::string_view text);

std::vector<OutputRecord> parse_jsonl(std::string_view text);

/// Inclusive range of n. "a..b" or a single "a".
struct NumberRange {
  std::uint64_t first = 1;
  std::uint64_t last = 1;
};

/// Throws std::invalid_argument on bad syntax, zero, or first > last.
NumberRange parse_range(std::string_view text);

}  // namespace prodpart
