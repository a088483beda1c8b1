#include "su11/table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "su11/errors.hpp"

namespace su11 {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

double parse_field(const std::string& field, std::size_t row) {
  double value = 0.0;
  const char* begin = field.data();
  const char* end = begin + field.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw IoError("csv row " + std::to_string(row) + ": bad numeric field '" +
                  field + "'");
  return value;
}

}  // namespace

void Table::add_column(std::string name, std::vector<double> values) {
  if (!columns.empty() && values.size() != columns[0].size())
    throw SizeError("column '" + name + "' length does not match the table");
  header.push_back(std::move(name));
  columns.push_back(std::move(values));
}

std::string format_double(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw IoError("double formatting failed");
  return std::string(buf, ptr);
}

void write_csv(std::ostream& os, const Table& table) {
  if (table.header.size() != table.columns.size())
    throw SizeError("table header does not match its column count");
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c != 0) os << ',';
    os << table.header[c];
  }
  os << '\n';
  for (std::size_t r = 0; r < table.rows(); ++r) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) {
      if (c != 0) os << ',';
      os << format_double(table.columns[c][r]);
    }
    os << '\n';
  }
}

void write_csv_file(const std::string& path, const Table& table) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  write_csv(os, table);
  os.flush();
  if (!os) throw IoError("write to '" + path + "' failed");
}

Table read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw IoError("csv stream is empty");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  Table table;
  table.header = split_fields(line);
  table.columns.assign(table.header.size(), {});
  std::size_t row = 0;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != table.header.size())
      throw IoError("csv row " + std::to_string(row) + " has " +
                    std::to_string(fields.size()) + " fields, expected " +
                    std::to_string(table.header.size()));
    for (std::size_t c = 0; c < fields.size(); ++c)
      table.columns[c].push_back(parse_field(fields[c], row));
    ++row;
  }
  return table;
}

Table read_csv_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open '" + path + "' for reading");
  return read_csv(is);
}

}  // namespace su11
