#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su11 {

// Column-major numeric table with a one-line header.  Integer-valued
// columns (trial indices, counts) are stored as exact doubles.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> columns;

  std::size_t rows() const { return columns.empty() ? 0 : columns[0].size(); }
  void add_column(std::string name, std::vector<double> values);
};

// Shortest representation that parses back to the same double.
std::string format_double(double value);

// CSV with an LF after every row, including the last.
void write_csv(std::ostream& os, const Table& table);
void write_csv_file(const std::string& path, const Table& table);

Table read_csv(std::istream& is);
Table read_csv_file(const std::string& path);

}  // namespace su11
