#include "eraodds/report.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>
#include <json.hpp>

#include "eraodds/csv.hpp"
#include "eraodds/error.hpp"

namespace eraodds {
namespace {

std::string exact(double v) { return fmt::format("{:.17g}", v); }

void render_table(std::ostream& out, const Tabular& data) {
  std::vector<std::size_t> width(data.columns.size(), 0);
  for (std::size_t c = 0; c < data.columns.size(); ++c) width[c] = data.columns[c].size();
  for (const auto& row : data.rows) {
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c) {
      width[c] = std::max(width[c], row[c].text.size());
    }
  }
  const auto line = [&](auto&& text_at, auto&& numeric_at) {
    std::string s;
    for (std::size_t c = 0; c < width.size(); ++c) {
      const std::string& t = text_at(c);
      const std::size_t pad = width[c] - t.size();
      if (c > 0) s += "  ";
      if (numeric_at(c)) {
        s += std::string(pad, ' ') + t;
      } else {
        s += t;
        if (c + 1 < width.size()) s += std::string(pad, ' ');
      }
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out << s << '\n';
  };
  // Header alignment follows the first row so numbers and their labels line up.
  const auto numeric_col = [&](std::size_t c) {
    return !data.rows.empty() && c < data.rows.front().size() && data.rows.front()[c].numeric;
  };
  line([&](std::size_t c) -> const std::string& { return data.columns[c]; }, numeric_col);
  for (const auto& row : data.rows) {
    static const std::string empty;
    line([&](std::size_t c) -> const std::string& { return c < row.size() ? row[c].text : empty; },
         [&](std::size_t c) { return c < row.size() && row[c].numeric; });
  }
}

void render_csv(std::ostream& out, const Tabular& data) {
  for (std::size_t c = 0; c < data.columns.size(); ++c) {
    out << (c ? "," : "") << csv::escape(data.columns[c]);
  }
  out << '\n';
  for (const auto& row : data.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv::escape(row[c].text);
    out << '\n';
  }
}

void render_json(std::ostream& out, const Tabular& data) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : data.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < row.size() && c < data.columns.size(); ++c) {
      if (row[c].numeric) {
        obj[data.columns[c]] = nlohmann::ordered_json::parse(row[c].text);
      } else {
        obj[data.columns[c]] = row[c].text;
      }
    }
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

template <typename T>
std::vector<T> unique_in_order(std::span<const OverrepReport> reports, T OverrepReport::*field) {
  std::vector<T> out;
  for (const auto& r : reports) {
    if (std::find(out.begin(), out.end(), r.*field) == out.end()) out.push_back(r.*field);
  }
  return out;
}

void render_report_blocks(std::ostream& out, std::span<const OverrepReport> reports) {
  const auto regimes = unique_in_order(reports, &OverrepReport::regime);
  bool first = true;
  for (const auto& regime : regimes) {
    std::vector<OverrepReport> block;
    for (const auto& r : reports) {
      if (r.regime == regime) block.push_back(r);
    }
    const auto sources = unique_in_order<std::string>(block, &OverrepReport::source);
    const auto depths = unique_in_order<int>(block, &OverrepReport::depth);
    const auto find = [&](const std::string& s, int d) -> const OverrepReport* {
      for (const auto& r : block) {
        if (r.source == s && r.depth == d) return &r;
      }
      return nullptr;
    };

    Tabular t;
    t.columns.push_back("");
    t.columns.insert(t.columns.end(), sources.begin(), sources.end());
    const auto add_rows = [&](bool probability) {
      for (const int d : depths) {
        std::vector<Cell> row;
        row.push_back(text_cell(std::string(probability ? "probability" : "chance") +
                                " of extreme event in top " + std::to_string(d) + " list"));
        for (const auto& s : sources) {
          const auto* r = find(s, d);
          if (!r) {
            row.push_back(text_cell("-"));
          } else if (probability) {
            row.push_back(text_cell(format_significant(r->tail_probability)));
          } else {
            row.push_back(text_cell(r->chance.display));
          }
        }
        t.rows.push_back(std::move(row));
      }
    };
    add_rows(true);
    add_rows(false);

    if (!first) out << '\n';
    first = false;
    if (!regime.empty()) out << "weights: " << regime << '\n';
    render_table(out, t);
  }
}

}  // namespace

OutputFormat parse_output_format(std::string_view name) {
  if (name == "table") return OutputFormat::table;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

Cell text_cell(std::string s) { return Cell{std::move(s), false}; }
Cell number_cell(std::string s) { return Cell{std::move(s), true}; }

void render(std::ostream& out, const Tabular& data, OutputFormat format) {
  switch (format) {
    case OutputFormat::table: render_table(out, data); break;
    case OutputFormat::csv: render_csv(out, data); break;
    case OutputFormat::json: render_json(out, data); break;
  }
}

Tabular reports_long(std::span<const OverrepReport> reports) {
  Tabular t;
  t.columns = {"regime",      "source",      "depth",           "cutoff",
               "early_count", "proportion",  "probability",     "chance",
               "proportion_exact", "probability_exact"};
  for (const auto& r : reports) {
    t.rows.push_back({text_cell(r.regime.empty() ? "none" : r.regime), text_cell(r.source),
                      number_cell(std::to_string(r.depth)),
                      number_cell(std::to_string(r.cutoff_year)),
                      number_cell(std::to_string(r.early_count)),
                      number_cell(format_fixed(r.proportion_used, 3)),
                      number_cell(format_significant(r.tail_probability)),
                      text_cell(r.chance.display), number_cell(exact(r.proportion_used)),
                      number_cell(exact(r.tail_probability))});
  }
  return t;
}

void render_reports(std::ostream& out, std::span<const OverrepReport> reports,
                    OutputFormat format) {
  if (format == OutputFormat::table) {
    render_report_blocks(out, reports);
  } else {
    render(out, reports_long(reports), format);
  }
}

}  // namespace eraodds
