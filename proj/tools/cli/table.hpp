#pragma once

#include <cstddef>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <variant>
#include <vector>

#include "run_config.hpp"

namespace padicqw {

// nullptr is an empty CSV field and a JSON null.
using Cell = std::variant<std::string, double, long long, bool, std::nullptr_t>;

/// Long-format record table. CSV output starts with '#' comment lines for the
/// schema and the parameter echo, then a header row; JSON output is
/// {schema, params, records[], ...extra}.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  // Extra top-level JSON members; emitted as '# key=value' lines in CSV.
  nlohmann::ordered_json extra = nlohmann::ordered_json::object();

  void add(std::vector<Cell> row) { rows.push_back(std::move(row)); }
};

nlohmann::ordered_json params_json(const RunConfig& cfg, const std::string& command);

void write_table(std::ostream& os, OutputFormat format, const std::string& command,
                 const RunConfig& cfg, const Table& table);

// Shortest representation that reads back to the same double.
std::string format_double(double v);

}  // namespace padicqw
