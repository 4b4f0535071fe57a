#include "prodpart/records.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "prodpart/counting.hpp"

namespace prodpart {

using ordered_json = nlohmann::ordered_json;

const char* column_name(Column c) {
  switch (c) {
    case Column::p_all: return "p_all";
    case Column::p_less: return "p_less";
    case Column::p_leq: return "p_leq";
    case Column::p_eq: return "p_eq";
    case Column::p_geq: return "p_geq";
    case Column::p_greater: return "p_greater";
  }
  return "?";
}

std::optional<Column> parse_column(std::string_view name) {
  for (auto c : all_columns) {
    if (name == column_name(c)) return c;
  }
  return std::nullopt;
}

std::vector<Column> parse_columns(std::string_view list) {
  std::vector<bool> chosen(all_columns.size(), false);
  while (!list.empty()) {
    const auto comma = list.find(',');
    const auto name = list.substr(0, comma);
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (name.empty()) continue;
    const auto c = parse_column(name);
    if (!c) throw std::invalid_argument("unknown quantity '" + std::string(name) + "'");
    chosen[static_cast<std::size_t>(*c)] = true;
  }
  std::vector<Column> out;
  for (auto c : all_columns) {
    if (chosen[static_cast<std::size_t>(c)]) out.push_back(c);
  }
  if (out.empty()) throw std::invalid_argument("empty quantity selection");
  return out;
}

namespace {

bool wants(const std::vector<Column>& columns, Column c) {
  return std::find(columns.begin(), columns.end(), c) != columns.end();
}

std::optional<std::string> cell(const OutputRecord& r, Column c) {
  const auto big = [](const std::optional<BigCount>& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return v->get_str();
  };
  const auto small = [](const std::optional<Count>& v) -> std::optional<std::string> {
    if (!v) return std::nullopt;
    return std::to_string(*v);
  };
  switch (c) {
    case Column::p_all: return big(r.p_all);
    case Column::p_less: return small(r.p_less);
    case Column::p_leq: return small(r.p_leq);
    case Column::p_eq: return small(r.p_eq);
    case Column::p_geq: return big(r.p_geq);
    case Column::p_greater: return big(r.p_greater);
  }
  return std::nullopt;
}

bool is_big(Column c) { return c == Column::p_all || c == Column::p_geq || c == Column::p_greater; }

template <class Int>
Int parse_int(std::string_view text, const char* what) {
  Int out{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return out;
}

BigCount parse_big(std::string_view text) {
  BigCount out;
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos ||
      out.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("bad count '" + std::string(text) + "'");
  }
  return out;
}

void assign(OutputRecord& r, std::string_view field, std::string_view value) {
  if (field == "n") {
    r.n = parse_int<std::uint64_t>(value, "n");
  } else if (field == "nanos") {
    r.nanos = parse_int<std::int64_t>(value, "nanos");
  } else if (auto c = parse_column(field)) {
    switch (*c) {
      case Column::p_all: r.p_all = parse_big(value); break;
      case Column::p_less: r.p_less = parse_int<Count>(value, "count"); break;
      case Column::p_leq: r.p_leq = parse_int<Count>(value, "count"); break;
      case Column::p_eq: r.p_eq = parse_int<Count>(value, "count"); break;
      case Column::p_geq: r.p_geq = parse_big(value); break;
      case Column::p_greater: r.p_greater = parse_big(value); break;
    }
  } else {
    throw std::invalid_argument("unknown field '" + std::string(field) + "'");
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = text.find(sep);
    out.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    text.remove_prefix(pos + 1);
  }
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

}  // namespace

OutputRecord make_record(std::uint64_t n, const std::vector<Column>& columns, bool timed) {
  const auto start = std::chrono::steady_clock::now();
  OutputRecord r;
  r.n = n;

  const bool need_all = wants(columns, Column::p_all) || wants(columns, Column::p_geq) ||
                        wants(columns, Column::p_greater);
  const bool need_less = wants(columns, Column::p_less) || wants(columns, Column::p_eq) ||
                         wants(columns, Column::p_geq);
  const bool need_leq = wants(columns, Column::p_leq) || wants(columns, Column::p_eq) ||
                        wants(columns, Column::p_greater);

  const BigCount all = need_all ? partition_count(n) : BigCount{0};
  const Count less = need_less ? count_product_less(n) : 0;
  const Count leq = need_leq ? count_product_at_most(n) : 0;

  if (wants(columns, Column::p_all)) r.p_all = all;
  if (wants(columns, Column::p_less)) r.p_less = less;
  if (wants(columns, Column::p_leq)) r.p_leq = leq;
  if (wants(columns, Column::p_eq)) r.p_eq = checked_sub(leq, less);
  if (wants(columns, Column::p_geq)) r.p_geq = all - to_big(less);
  if (wants(columns, Column::p_greater)) r.p_greater = all - to_big(leq);

  if (timed) {
    r.nanos = std::chrono::duration_cast<std::chrono::nanoseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  }
  return r;
}

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::table;
  if (name == "csv") return Format::csv;
  if (name == "jsonl") return Format::jsonl;
  return std::nullopt;
}

std::string render_records(const std::vector<OutputRecord>& records,
                           const std::vector<Column>& columns, Format format, bool timed) {
  std::vector<std::string> header{"n"};
  for (auto c : columns) header.emplace_back(column_name(c));
  if (timed) header.emplace_back("nanos");

  std::vector<std::vector<std::string>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    std::vector<std::string> row{std::to_string(r.n)};
    for (auto c : columns) row.push_back(cell(r, c).value_or(""));
    if (timed) row.push_back(r.nanos ? std::to_string(*r.nanos) : "");
    rows.push_back(std::move(row));
  }

  std::ostringstream out;
  switch (format) {
    case Format::csv: {
      const auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
        out << '\n';
      };
      line(header);
      for (const auto& row : rows) line(row);
      break;
    }
    case Format::jsonl: {
      for (const auto& r : records) {
        ordered_json j;
        j["n"] = r.n;
        for (auto c : columns) {
          const auto v = cell(r, c);
          if (!v) continue;
          // 64-bit counts stay numeric; unbounded ones are exact decimal strings.
          if (is_big(c)) {
            j[column_name(c)] = *v;
          } else {
            j[column_name(c)] = parse_int<Count>(*v, "count");
          }
        }
        if (timed && r.nanos) j["nanos"] = *r.nanos;
        out << j.dump() << '\n';
      }
      break;
    }
    case Format::table: {
      std::vector<std::size_t> width(header.size());
      for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
      for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      const auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
          if (i) out << "  ";
          out << std::string(width[i] - fields[i].size(), ' ') << fields[i];
        }
        out << '\n';
      };
      line(header);
      for (const auto& row : rows) line(row);
      break;
    }
  }
  return out.str();
}

std::vector<OutputRecord> parse_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty()) throw std::invalid_argument("CSV input has no header");
  const auto header = split(lines.front(), ',');
  std::vector<OutputRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], ',');
    if (fields.size() != header.size()) {
      throw std::invalid_argument("CSV row " + std::to_string(i) + " has " +
                                  std::to_string(fields.size()) + " fields, expected " +
                                  std::to_string(header.size()));
    }
    OutputRecord r;
    for (std::size_t f = 0; f < fields.size(); ++f) {
      if (!fields[f].empty()) assign(r, header[f], fields[f]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<OutputRecord> parse_jsonl(std::string_view text) {
  std::vector<OutputRecord> out;
  for (auto line : lines_of(text)) {
    const auto j = nlohmann::json::parse(line);
    OutputRecord r;
    for (const auto& [key, value] : j.items()) {
      assign(r, key, value.is_string() ? value.get<std::string>() : value.dump());
    }
    out.push_back(std::move(r));
  }
  return out;
}

NumberRange parse_range(std::string_view text) {
  NumberRange range;
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    range.first = range.last = parse_int<std::uint64_t>(text, "n");
  } else {
    range.first = parse_int<std::uint64_t>(text.substr(0, dots), "range start");
    range.last = parse_int<std::uint64_t>(text.substr(dots + 2), "range end");
  }
  if (range.first == 0) throw std::invalid_argument("n must be >= 1");
  if (range.first > range.last) {
    throw std::invalid_argument("range '" + std::string(text) + "' is not ordered");
  }
  return range;
}

}  // namespace prodpart
