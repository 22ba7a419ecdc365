#pragma once

#include <istream>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace eraodds {

using Year = int;

/// Eligible population (millions) counted for the period
/// (period_end_year - period_length_years, period_end_year].
struct PopulationRecord {
  Year period_end_year = 0;
  double population = 0.0;
  int period_length_years = 10;

  [[nodiscard]] Year period_start_year() const noexcept {
    return period_end_year - period_length_years;
  }
};

/// Ordered, non-overlapping population records. Immutable once built.
class PopulationTable {
 public:
  /// Throws ValidationError if the records are empty, unsorted, overlapping,
  /// non-positive, or have a period length outside 1..10.
  explicit PopulationTable(std::vector<PopulationRecord> records);

  [[nodiscard]] std::span<const PopulationRecord> records() const noexcept { return records_; }
  [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
  [[nodiscard]] Year first_year() const noexcept { return records_.front().period_end_year; }
  [[nodiscard]] Year last_year() const noexcept { return records_.back().period_end_year; }

  /// Population through `cutoff_year`, with the record whose period straddles
  /// the cutoff included pro rata by elapsed years. Each record's population is
  /// scaled by `weights[i]` when weights are given (one per record).
  ///
  /// Throws OutOfRangeError outside [first_year(), last_year()].
  [[nodiscard]] double population_through(Year cutoff_year,
                                          std::span<const double> weights = {}) const;

  /// Same as population_through(last_year(), weights).
  [[nodiscard]] double total(std::span<const double> weights = {}) const;

 private:
  std::vector<PopulationRecord> records_;
};

/// Per-period interest weights in [0, 1], keyed by period_end_year.
struct WeightRegime {
  std::string name;
  std::map<Year, double> weights;

  /// Every record of `table` gets weight `value`.
  static WeightRegime uniform(std::string name, const PopulationTable& table, double value = 1.0);

  /// Weights ordered like `table.records()`. Throws ConfigError when the
  /// regime's years differ from the table's or a weight is outside [0, 1].
  [[nodiscard]] std::vector<double> aligned_to(const PopulationTable& table) const;
};

/// Share of the all-time eligible population at or before `cutoff_year`.
[[nodiscard]] double cumulative_proportion(const PopulationTable& table, Year cutoff_year);

/// As cumulative_proportion, with every record first multiplied by its regime
/// weight in both numerator and denominator.
[[nodiscard]] double weighted_cumulative_proportion(const PopulationTable& table,
                                                    const WeightRegime& regime,
                                                    Year cutoff_year);

/// `year,population_millions[,period_length_years]`; missing length means 10.
PopulationTable load_population_table(std::istream& in, const std::string& source);
PopulationTable load_population_table(const std::string& path);

/// `year,<regime1>,<regime2>,...`; one regime per column, in column order.
std::vector<WeightRegime> load_weight_regimes(std::istream& in, const std::string& source);
std::vector<WeightRegime> load_weight_regimes(const std::string& path);

}  // namespace eraodds
