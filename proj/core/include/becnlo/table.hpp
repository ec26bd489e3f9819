#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace becnlo {

// Column-major numeric table with CSV output: comma separated, '\n' line
// endings, header row, every value printed with 9 significant digits.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  // Appends log10_<name> for every listed column, computed from the raw values.
  void append_log10_columns(const std::vector<std::string>& names);
  std::size_t column_index(const std::string& name) const;

  void write_csv(std::ostream& out) const;
  std::string to_csv() const;
};

// "%.9g" formatting shared by CSV and human-readable output.
std::string format_number(double value);

}  // namespace becnlo
