#include "eraodds/detrend.hpp"

#include <cmath>
#include <fstream>

#include "eraodds/csv.hpp"
#include "eraodds/error.hpp"

namespace eraodds {

DetrendContext::DetrendContext(double historic_average) : historic_average_(historic_average) {
  if (!(historic_average > 0.0) || !std::isfinite(historic_average)) {
    throw DomainError("historic average must be positive");
  }
}

DetrendContext DetrendContext::from_league_averages(std::span<const double> league_averages) {
  if (league_averages.empty()) throw DomainError("no league averages to average");
  double sum = 0.0;
  for (const double a : league_averages) {
    if (!(a > 0.0)) throw DomainError("league averages must be positive");
    sum += a;
  }
  return DetrendContext(sum / static_cast<double>(league_averages.size()));
}

double detrend_value(double value, double league_average, double historic_average) {
  if (!(league_average > 0.0)) throw DomainError("league average must be positive");
  if (!(historic_average > 0.0)) throw DomainError("historic average must be positive");
  return value * historic_average / league_average;
}

double detrend_career(std::span<const SeasonStat> stats, const DetrendContext& ctx) {
  if (stats.empty()) throw DomainError("career has no seasons");
  double total = 0.0;
  for (const auto& s : stats) {
    if (s.value < 0.0) {
      throw DomainError("season " + std::to_string(s.season) + ": negative value");
    }
    total += detrend_value(s.value, s.league_average, ctx.historic_average());
  }
  return total;
}

double detrend_career(std::span<const SeasonStat> stats, const DetrendContext& ctx,
                      std::span<const double> league_universe) {
  const double expected = DetrendContext::from_league_averages(league_universe).historic_average();
  if (std::abs(expected - ctx.historic_average()) > 1e-9) {
    throw ValidationError("historic average " + std::to_string(ctx.historic_average()) +
                          " does not match the league universe mean " + std::to_string(expected));
  }
  return detrend_career(stats, ctx);
}

std::vector<SeasonStat> load_season_stats(std::istream& in, const std::string& source) {
  const auto doc = csv::read(in, source);
  csv::expect_header(doc, {"season", "value", "league_average"});
  if (doc.rows.empty()) throw ParseError(source, doc.header_line, "no seasons");
  std::vector<SeasonStat> out;
  for (const auto& row : doc.rows) {
    SeasonStat s;
    s.season = static_cast<Year>(csv::parse_integer(doc, row, 0));
    s.value = csv::parse_real(doc, row, 1);
    s.league_average = csv::parse_real(doc, row, 2);
    if (s.value < 0.0) throw ParseError(source, row.line, "value must be non-negative");
    if (!(s.league_average > 0.0)) {
      throw ParseError(source, row.line, "league_average must be positive");
    }
    out.push_back(s);
  }
  return out;
}

std::vector<SeasonStat> load_season_stats(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_season_stats(in, path);
}

}  // namespace eraodds
