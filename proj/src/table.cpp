#include "erfpoly/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>
#include <system_error>

namespace erfpoly {
namespace {

// "d.ddde-05" -> "d.ddde-5", "de+00" -> "de0"
std::string tidy_exponent(std::string s) {
  const auto e = s.find('e');
  if (e == std::string::npos) return s;
  std::string mant = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  bool neg = false;
  if (!exp.empty() && (exp[0] == '+' || exp[0] == '-')) {
    neg = exp[0] == '-';
    exp.erase(0, 1);
  }
  const auto nz = exp.find_first_not_of('0');
  exp = nz == std::string::npos ? "0" : exp.substr(nz);
  return mant + "e" + (neg && exp != "0" ? "-" : "") + exp;
}

std::string special(double v) {
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return special(v);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific);
  return tidy_exponent(std::string(buf, res.ptr));
}

std::string format_double17(double v) {
  if (!std::isfinite(v)) return special(v);
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 16);
  return tidy_exponent(std::string(buf, res.ptr));
}

void write_table(std::ostream& os, const Table& table, TableFormat format) {
  const char sep = format == TableFormat::kCsv ? ',' : '\t';
  os << "# ";
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) os << sep;
    os << table.columns[i];
  }
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << sep;
      os << format_double(row[i]);
    }
    os << '\n';
  }
}

std::string table_to_string(const Table& table, TableFormat format) {
  std::ostringstream os;
  write_table(os, table, format);
  return os.str();
}

std::optional<TableFormat> parse_table_format(const std::string& name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "tsv") return TableFormat::kTsv;
  return std::nullopt;
}

}  // namespace erfpoly
