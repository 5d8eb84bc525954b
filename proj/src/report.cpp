#include "linnik/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace linnik::report {

namespace {

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_number(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

std::string cell_json(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return json_string(v);
        } else if constexpr (std::is_same_v<T, double>) {
          return std::isfinite(v) ? format_number(v) : "null";
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw std::invalid_argument("unknown output format: " + std::string(name));
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string emit_report(const Report& report, Format format) {
  const Table& t = report.table;
  for (const auto& row : t.rows)
    if (row.size() != t.columns.size()) throw std::logic_error("report row width does not match header");

  std::string out;
  if (format == Format::csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) out += ',';
      out += csv_field(t.columns[i]);
    }
    out += '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_field(cell_text(row[i]));
      }
      out += '\n';
    }
    return out;
  }

  out += "{\"command\":" + json_string(report.command) + ",\"params\":{";
  for (std::size_t i = 0; i < report.params.size(); ++i) {
    if (i) out += ',';
    out += json_string(report.params[i].first) + ':' + cell_json(report.params[i].second);
  }
  out += "},\"rows\":[";
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    if (r) out += ',';
    out += '{';
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
      if (i) out += ',';
      out += json_string(t.columns[i]) + ':' + cell_json(t.rows[r][i]);
    }
    out += '}';
  }
  out += "]}\n";
  return out;
}

}  // namespace linnik::report
