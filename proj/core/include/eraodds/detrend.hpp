#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "eraodds/population.hpp"

namespace eraodds {

/// A player's counting statistic for one season next to the league mean of
/// the same statistic.
struct SeasonStat {
  Year season = 0;
  double value = 0.0;
  double league_average = 0.0;
};

/// Long-run baseline the seasonal league averages are scaled to.
class DetrendContext {
 public:
  /// Throws DomainError unless historic_average > 0.
  explicit DetrendContext(double historic_average);

  /// Arithmetic mean of the supplied per-season league averages.
  static DetrendContext from_league_averages(std::span<const double> league_averages);

  [[nodiscard]] double historic_average() const noexcept { return historic_average_; }

 private:
  double historic_average_;
};

/// value * historic_average / league_average.
[[nodiscard]] double detrend_value(double value, double league_average, double historic_average);

/// Sum of detrend_value over the seasons. Throws DomainError on empty input.
[[nodiscard]] double detrend_career(std::span<const SeasonStat> stats, const DetrendContext& ctx);

/// As above, first checking that `ctx` is the mean of `league_universe`
/// (every league-season in scope) to within 1e-9; ValidationError otherwise.
[[nodiscard]] double detrend_career(std::span<const SeasonStat> stats, const DetrendContext& ctx,
                                    std::span<const double> league_universe);

/// `season,value,league_average`.
std::vector<SeasonStat> load_season_stats(std::istream& in, const std::string& source);
std::vector<SeasonStat> load_season_stats(const std::string& path);

}  // namespace eraodds
