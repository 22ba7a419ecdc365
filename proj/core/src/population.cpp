#include "eraodds/population.hpp"

#include <fstream>
#include <set>

#include "eraodds/csv.hpp"
#include "eraodds/error.hpp"

namespace eraodds {

PopulationTable::PopulationTable(std::vector<PopulationRecord> records)
    : records_(std::move(records)) {
  if (records_.empty()) throw ValidationError("population table is empty");
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    const std::string where = "population record " + std::to_string(r.period_end_year);
    if (!(r.population > 0.0)) throw ValidationError(where + ": population must be positive");
    if (r.period_length_years < 1 || r.period_length_years > 10) {
      throw ValidationError(where + ": period length must be in 1..10");
    }
    if (i > 0) {
      const auto& prev = records_[i - 1];
      if (r.period_end_year <= prev.period_end_year) {
        throw ValidationError(where + ": years must be strictly increasing");
      }
      if (r.period_start_year() < prev.period_end_year) {
        throw ValidationError(where + ": period overlaps record " +
                              std::to_string(prev.period_end_year));
      }
    }
  }
}

double PopulationTable::population_through(Year cutoff_year,
                                           std::span<const double> weights) const {
  if (cutoff_year < first_year() || cutoff_year > last_year()) {
    throw OutOfRangeError("cutoff year " + std::to_string(cutoff_year) + " outside " +
                          std::to_string(first_year()) + ".." + std::to_string(last_year()));
  }
  if (!weights.empty() && weights.size() != records_.size()) {
    throw ConfigError("weight count does not match population table");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < records_.size(); ++i) {
    const auto& r = records_[i];
    const double pop = weights.empty() ? r.population : r.population * weights[i];
    if (r.period_end_year <= cutoff_year) {
      sum += pop;
    } else {
      if (cutoff_year > r.period_start_year()) {
        sum += pop * static_cast<double>(cutoff_year - r.period_start_year()) /
               static_cast<double>(r.period_length_years);
      }
      break;
    }
  }
  return sum;
}

double PopulationTable::total(std::span<const double> weights) const {
  return population_through(last_year(), weights);
}

WeightRegime WeightRegime::uniform(std::string name, const PopulationTable& table, double value) {
  WeightRegime regime{std::move(name), {}};
  for (const auto& r : table.records()) regime.weights.emplace(r.period_end_year, value);
  return regime;
}

std::vector<double> WeightRegime::aligned_to(const PopulationTable& table) const {
  if (weights.size() != table.size()) {
    throw ConfigError("regime '" + name + "' has " + std::to_string(weights.size()) +
                      " weights but the population table has " + std::to_string(table.size()) +
                      " records");
  }
  std::vector<double> out;
  out.reserve(table.size());
  for (const auto& r : table.records()) {
    const auto it = weights.find(r.period_end_year);
    if (it == weights.end()) {
      throw ConfigError("regime '" + name + "' has no weight for " +
                        std::to_string(r.period_end_year));
    }
    if (!(it->second >= 0.0 && it->second <= 1.0)) {
      throw ConfigError("regime '" + name + "' weight for " + std::to_string(it->first) +
                        " is outside [0, 1]");
    }
    out.push_back(it->second);
  }
  return out;
}

double cumulative_proportion(const PopulationTable& table, Year cutoff_year) {
  return table.population_through(cutoff_year) / table.total();
}

double weighted_cumulative_proportion(const PopulationTable& table, const WeightRegime& regime,
                                      Year cutoff_year) {
  const auto w = regime.aligned_to(table);
  const double through = table.population_through(cutoff_year, w);
  const double total = table.total(w);
  if (!(through > 0.0)) {
    throw DomainError("regime '" + regime.name + "' gives zero weighted population through " +
                      std::to_string(cutoff_year));
  }
  return through / total;
}

PopulationTable load_population_table(std::istream& in, const std::string& source) {
  const auto doc = csv::read(in, source, 2);
  csv::expect_header(doc, {"year", "population_millions"});
  const bool has_length = doc.header.size() >= 3;
  if (has_length) csv::expect_header(doc, {"year", "population_millions", "period_length_years"});
  if (doc.rows.empty()) throw ParseError(source, doc.header_line, "no population records");

  std::vector<PopulationRecord> records;
  for (const auto& row : doc.rows) {
    PopulationRecord r;
    r.period_end_year = static_cast<Year>(csv::parse_integer(doc, row, 0));
    r.population = csv::parse_real(doc, row, 1);
    if (has_length && row.fields.size() >= 3 && !row.fields[2].empty()) {
      r.period_length_years = static_cast<int>(csv::parse_integer(doc, row, 2));
    }
    records.push_back(r);
  }
  try {
    return PopulationTable(std::move(records));
  } catch (const ValidationError& e) {
    throw ValidationError(source + ": " + e.what());
  }
}

PopulationTable load_population_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_population_table(in, path);
}

std::vector<WeightRegime> load_weight_regimes(std::istream& in, const std::string& source) {
  const auto doc = csv::read(in, source);
  csv::expect_header(doc, {"year"});
  if (doc.header.size() < 2) throw ParseError(source, doc.header_line, "no regime columns");

  std::vector<WeightRegime> regimes;
  std::set<std::string> names;
  for (std::size_t c = 1; c < doc.header.size(); ++c) {
    if (doc.header[c].empty() || !names.insert(doc.header[c]).second) {
      throw ParseError(source, doc.header_line, "regime names must be non-empty and unique");
    }
    regimes.push_back(WeightRegime{doc.header[c], {}});
  }
  for (const auto& row : doc.rows) {
    const auto year = static_cast<Year>(csv::parse_integer(doc, row, 0));
    for (std::size_t c = 1; c < doc.header.size(); ++c) {
      const double w = csv::parse_real(doc, row, c);
      if (!(w >= 0.0 && w <= 1.0)) {
        throw ParseError(source, row.line, "weight '" + doc.header[c] + "' outside [0, 1]");
      }
      if (!regimes[c - 1].weights.emplace(year, w).second) {
        throw ParseError(source, row.line, "duplicate year " + std::to_string(year));
      }
    }
  }
  return regimes;
}

std::vector<WeightRegime> load_weight_regimes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_weight_regimes(in, path);
}

}  // namespace eraodds
