#include "becnlo/table.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "becnlo/errors.hpp"

namespace becnlo {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

void Table::add_row(std::vector<double> row) {
  if (row.size() != columns.size()) throw ValidationError("row", "column count mismatch");
  rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (columns[i] == name) return i;
  }
  throw ValidationError(name, "no such column");
}

void Table::append_log10_columns(const std::vector<std::string>& names) {
  std::vector<std::size_t> source;
  for (const auto& name : names) source.push_back(column_index(name));
  for (const auto& name : names) columns.push_back("log10_" + name);
  for (auto& row : rows) {
    for (std::size_t idx : source) row.push_back(std::log10(row[idx]));
  }
}

void Table::write_csv(std::ostream& out) const {
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) out << ',';
    out << columns[i];
  }
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << format_number(row[i]);
    }
    out << '\n';
  }
}

std::string Table::to_csv() const {
  std::ostringstream out;
  write_csv(out);
  return out.str();
}

}  // namespace becnlo
