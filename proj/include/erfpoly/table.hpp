#pragma once

// Text tables and number formatting shared by the CLI and the figure
// generators.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace erfpoly {

enum class TableFormat { kCsv, kTsv };

// Shortest round-trip scientific form, lowercase 'e', exponent without '+'
// or leading zeros ("1.5e-1", "2e3").  NaN prints as "nan".
std::string format_double(double v);
// Same layout with exactly 17 significant digits.
std::string format_double17(double v);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

// Header line is "# " followed by the column names; LF line endings.
void write_table(std::ostream& os, const Table& table, TableFormat format);
std::string table_to_string(const Table& table, TableFormat format);

std::optional<TableFormat> parse_table_format(const std::string& name);

}  // namespace erfpoly
