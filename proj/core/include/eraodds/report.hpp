#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eraodds/analysis.hpp"

namespace eraodds {

enum class OutputFormat { table, csv, json };

/// "table", "csv" or "json"; throws ConfigError otherwise.
[[nodiscard]] OutputFormat parse_output_format(std::string_view name);

struct Cell {
  std::string text;
  bool numeric = false;
};

/// Column-labelled rows of display strings. Numeric cells are emitted as JSON
/// numbers, everything else as strings.
struct Tabular {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

[[nodiscard]] Cell text_cell(std::string s);
[[nodiscard]] Cell number_cell(std::string s);

/// Aligned columns / comma-delimited / JSON array of objects.
void render(std::ostream& out, const Tabular& data, OutputFormat format);

/// One row per report with display values (proportion to 3 decimals,
/// probability to 3 significant figures) and the full-precision values.
[[nodiscard]] Tabular reports_long(std::span<const OverrepReport> reports);

/// Table format lays reports out like the published tables: one block per
/// regime, list sources as columns, a probability row and a chance row per
/// depth. csv and json use reports_long.
void render_reports(std::ostream& out, std::span<const OverrepReport> reports,
                    OutputFormat format);

}  // namespace eraodds
