#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace eraodds::csv {

/// One data row of a delimited file with the line it came from.
struct Row {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

/// Header plus data rows of a comma-delimited file.
///
/// Blank lines and lines starting with '#' are skipped. Fields are trimmed of
/// surrounding whitespace; double-quoted fields may contain commas and "" as
/// an escaped quote. Every data row must have between `min_columns` and the
/// header's column count fields.
struct Document {
  std::string source;
  std::size_t header_line = 0;
  std::vector<std::string> header;
  std::vector<Row> rows;

  /// Index of a header column, or npos.
  [[nodiscard]] std::size_t column(std::string_view name) const;
};

/// Throws ParseError on an empty document or ragged rows.
Document read(std::istream& in, std::string source, std::size_t min_columns = 0);
Document read_file(const std::string& path, std::size_t min_columns = 0);

/// Requires the header to start with exactly `expected` (case-insensitive).
void expect_header(const Document& doc, const std::vector<std::string>& expected);

/// Strict numeric field conversion; the whole field must be consumed.
long long parse_integer(const Document& doc, const Row& row, std::size_t column);
double parse_real(const Document& doc, const Row& row, std::size_t column);

/// Quotes a field if it contains a delimiter, quote or surrounding space.
std::string escape(std::string_view field);

}  // namespace eraodds::csv
