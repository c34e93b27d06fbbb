#include "report.hpp"

#include <charconv>
#include <cmath>

#include "molsym/common.hpp"

namespace molsym::cli {

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "markdown-table" || s == "markdown" || s == "md") return Format::Markdown;
  throw InvalidArgument("unknown format '" + s + "'");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string cell_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_null()) return "";
  if (j.is_number_float()) return format_double(j.get<double>());
  return j.dump();
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

Json column_meta(const std::vector<Column>& cols) {
  Json a = Json::array();
  for (const auto& c : cols) a.push_back({{"name", c.name}, {"unit", c.unit}, {"exact", c.exact}});
  return a;
}

std::string meta_line(const Report& r) {
  Json head = {{"schema", 1}, {"command", r.command}, {"config", r.config}, {"columns", column_meta(r.columns)}};
  return head.dump();
}

}  // namespace

void emit(const Report& r, Format f, std::ostream& out) {
  switch (f) {
    case Format::Json: {
      Json j = {{"schema", 1}, {"command", r.command}, {"config", r.config}};
      for (auto it = r.body.begin(); it != r.body.end(); ++it) j[it.key()] = it.value();
      if (r.rows_in_json) {
        j["columns"] = column_meta(r.columns);
        Json rows = Json::array();
        for (const auto& row : r.rows) {
          Json o = Json::object();
          for (std::size_t c = 0; c < r.columns.size(); ++c) o[r.columns[c].name] = row[c];
          rows.push_back(std::move(o));
        }
        j["rows"] = std::move(rows);
      }
      out << j.dump(2) << "\n";
      break;
    }
    case Format::Csv: {
      out << "# " << meta_line(r) << "\n";
      for (std::size_t c = 0; c < r.columns.size(); ++c) out << (c ? "," : "") << csv_quote(r.columns[c].name);
      out << "\n";
      for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_quote(cell_text(row[c]));
        out << "\n";
      }
      break;
    }
    case Format::Markdown: {
      out << "<!-- " << meta_line(r) << " -->\n\n|";
      for (const auto& c : r.columns) out << " " << c.name << (c.unit.empty() ? "" : " [" + c.unit + "]") << " |";
      out << "\n|";
      for (std::size_t c = 0; c < r.columns.size(); ++c) out << " --- |";
      out << "\n";
      for (const auto& row : r.rows) {
        out << "|";
        for (const auto& cell : row) out << " " << cell_text(cell) << " |";
        out << "\n";
      }
      break;
    }
  }
}

}  // namespace molsym::cli
