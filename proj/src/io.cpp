#include "sturmian/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace sturmian::io {

void Dataset::add_row(std::vector<Cell> row) {
  if (row.size() != columns.size())
    throw std::invalid_argument("Dataset: row width does not match header");
  rows.push_back(std::move(row));
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";  // fold away negative zero
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string cell_csv(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  return csv_escape(std::get<std::string>(cell));
}

std::string cell_json(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    if (std::isnan(*d)) return "null";
    return format_number(*d);
  }
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  return json_escape(std::get<std::string>(cell));
}

std::string dataset_json_rows(const Dataset& data) {
  std::string out = "[";
  for (std::size_t r = 0; r < data.rows.size(); ++r) {
    out += (r == 0) ? "\n" : ",\n";
    out += "  {";
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
      if (c > 0) out += ", ";
      out += json_escape(data.columns[c]);
      out += ": ";
      out += cell_json(data.rows[r][c]);
    }
    out += "}";
  }
  out += "\n]";
  return out;
}

}  // namespace

std::string to_csv(const Dataset& data) {
  std::string out;
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    if (c > 0) out += ',';
    out += csv_escape(data.columns[c]);
  }
  out += '\n';
  for (const auto& row : data.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c > 0) out += ',';
      out += cell_csv(row[c]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Dataset& data) { return dataset_json_rows(data) + "\n"; }

std::string to_csv(const std::vector<Dataset>& datasets) {
  std::string out;
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    if (i > 0) out += '\n';
    out += to_csv(datasets[i]);
  }
  return out;
}

std::string to_json(const std::vector<Dataset>& datasets) {
  std::string out = "{";
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    out += (i == 0) ? "\n" : ",\n";
    out += json_escape(datasets[i].name);
    out += ": ";
    out += dataset_json_rows(datasets[i]);
  }
  out += "\n}\n";
  return out;
}

}  // namespace sturmian::io
