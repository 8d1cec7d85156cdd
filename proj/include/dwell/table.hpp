#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace dwell {

/// Blank, floating, integer or text cell.
using Cell = std::variant<std::monostate, double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// printf "%.12g"; non-finite values print as inf, -inf or nan.
std::string format_number(double value);

/// Header row then one line per row, LF endings. Text containing a comma or
/// quote is quoted.
void write_csv(std::ostream& os, const Table& table);
void write_csv_rows(std::ostream& os, const Table& table, std::size_t first, std::size_t last);
void write_csv_header(std::ostream& os, const Table& table);

/// {"params": ..., "method": ..., "rows": [{column: value}, ...]}. Numbers
/// carry exactly the digits write_csv prints; blank and non-finite cells are null.
nlohmann::ordered_json to_json(const Table& table, const nlohmann::ordered_json& params,
                               const std::string& method);

}  // namespace dwell
