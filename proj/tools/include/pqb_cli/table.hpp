#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace pqb::cli {

using Cell = std::variant<std::string, std::int64_t, double, bool>;

/// One subcommand's result: a header, rows, and scalar metadata that only
/// appears in the JSON form.
struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> meta;

  void add(std::vector<Cell> row);
};

inline constexpr int kSchemaVersion = 1;

/// %.17g for reals, true/false for flags, RFC 4180 quoting for text.
std::string format_cell(const Cell& cell);
void write_csv(const Table& table, std::ostream& out);
void write_json(const Table& table, std::ostream& out);

}  // namespace pqb::cli
