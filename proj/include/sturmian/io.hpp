#pragma once

// Tabular dataset plus CSV and JSON serializers. Floats are written with
// 12 significant digits, locale-independent, '.' decimal separator; the
// JSON mirrors the CSV rows as an array of objects with the same field
// names and the same number formatting.

#include <string>
#include <variant>
#include <vector>

namespace sturmian::io {

using Cell = std::variant<double, long long, std::string, bool>;

struct Dataset {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
};

std::string format_number(double value);

std::string to_csv(const Dataset& data);
std::string to_json(const Dataset& data);

// multi-dataset forms (blank-line separated CSV; JSON object keyed by name)
std::string to_csv(const std::vector<Dataset>& datasets);
std::string to_json(const std::vector<Dataset>& datasets);

}  // namespace sturmian::io
