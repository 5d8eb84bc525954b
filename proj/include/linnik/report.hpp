#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace linnik::report {

using Cell = std::variant<std::int64_t, std::uint64_t, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, Cell>> params;
  Table table;
};

enum class Format { csv, json };

Format parse_format(std::string_view name);

// %.17g; non-finite values print as nan / inf / -inf.
std::string format_number(double x);

// RFC 4180 field quoting.
std::string csv_field(std::string_view s);

// csv: header row then data rows (CRLF-free, '\n' terminated).
// json: {"command": ..., "params": {...}, "rows": [{column: value, ...}, ...]}
// with doubles at 17 significant digits and non-finite doubles as null.
std::string emit_report(const Report& report, Format format);

}  // namespace linnik::report
