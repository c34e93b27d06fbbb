#pragma once

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace molsym::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Csv, Markdown };

Format parse_format(const std::string& s);

struct Column {
  std::string name;
  std::string unit;  // empty for dimensionless
  bool exact = true;
};

/// One emitted artifact. JSON carries `body` plus the rows; the tabular
/// formats carry the rows and a commented header with the config.
struct Report {
  std::string command;
  Json config = Json::object();
  std::vector<Column> columns;
  std::vector<std::vector<Json>> rows;
  Json body = Json::object();
  bool rows_in_json = true;
};

void emit(const Report& r, Format f, std::ostream& out);

/// Shortest round-trip decimal.
std::string format_double(double v);

}  // namespace molsym::cli
