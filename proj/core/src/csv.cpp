#include "eraodds/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>

#include "eraodds/error.hpp"

namespace eraodds::csv {
namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::vector<std::string> split(std::string_view line, const std::string& source,
                               std::size_t line_no) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(c);
      }
    } else if (c == '"' && trim(current).empty()) {
      current.clear();
      quoted = true;
      was_quoted = true;
    } else if (c == ',') {
      fields.push_back(was_quoted ? current : std::string(trim(current)));
      current.clear();
      was_quoted = false;
    } else if (was_quoted) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        throw ParseError(source, line_no, "unexpected text after closing quote");
      }
    } else {
      current.push_back(c);
    }
  }
  if (quoted) throw ParseError(source, line_no, "unterminated quoted field");
  fields.push_back(was_quoted ? current : std::string(trim(current)));
  return fields;
}

}  // namespace

std::size_t Document::column(std::string_view name) const {
  const std::string key = lower(name);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (lower(header[i]) == key) return i;
  }
  return std::string::npos;
}

Document read(std::istream& in, std::string source, std::size_t min_columns) {
  Document doc;
  doc.source = std::move(source);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string_view view = trim(raw);
    if (view.empty() || view.front() == '#') continue;
    auto fields = split(raw, doc.source, line_no);
    if (doc.header.empty()) {
      doc.header = std::move(fields);
      doc.header_line = line_no;
      continue;
    }
    const std::size_t lo = min_columns == 0 ? doc.header.size() : min_columns;
    if (fields.size() < lo || fields.size() > doc.header.size()) {
      throw ParseError(doc.source, line_no,
                       "expected " + std::to_string(doc.header.size()) + " fields, found " +
                           std::to_string(fields.size()));
    }
    doc.rows.push_back(Row{line_no, std::move(fields)});
  }
  if (doc.header.empty()) throw ParseError(doc.source, line_no == 0 ? 1 : line_no, "empty file");
  return doc;
}

Document read_file(const std::string& path, std::size_t min_columns) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read(in, path, min_columns);
}

void expect_header(const Document& doc, const std::vector<std::string>& expected) {
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i >= doc.header.size() || lower(doc.header[i]) != lower(expected[i])) {
      std::string want;
      for (const auto& e : expected) want += (want.empty() ? "" : ",") + e;
      throw ParseError(doc.source, doc.header_line, "header must start with '" + want + "'");
    }
  }
}

long long parse_integer(const Document& doc, const Row& row, std::size_t column) {
  const std::string& field = row.fields.at(column);
  long long value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end) {
    throw ParseError(doc.source, row.line,
                     "field '" + doc.header.at(column) + "': not an integer: '" + field + "'");
  }
  return value;
}

double parse_real(const Document& doc, const Row& row, std::size_t column) {
  const std::string& field = row.fields.at(column);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ParseError(doc.source, row.line,
                     "field '" + doc.header.at(column) + "': not a number: '" + field + "'");
  }
  return value;
}

std::string escape(std::string_view field) {
  const bool needs = field.find_first_of(",\"\n") != std::string_view::npos ||
                     (!field.empty() && (std::isspace(static_cast<unsigned char>(field.front())) ||
                                         std::isspace(static_cast<unsigned char>(field.back()))));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace eraodds::csv
