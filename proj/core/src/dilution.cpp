#include "eraodds/dilution.hpp"

#include <cmath>
#include <fstream>

#include "eraodds/csv.hpp"
#include "eraodds/error.hpp"
#include "eraodds/tailprob.hpp"

namespace eraodds {

double per_roster_spot(const LeagueSeason& season) {
  if (season.teams < 1 || season.roster_size < 1) {
    throw DomainError("season " + std::to_string(season.year) +
                      ": teams and roster size must be positive");
  }
  if (!(season.eligible_population > 0.0)) {
    throw DomainError("season " + std::to_string(season.year) +
                      ": eligible population must be positive");
  }
  const double spots = static_cast<double>(season.teams) * static_cast<double>(season.roster_size);
  return season.eligible_population * 1e6 / spots / 1e3;
}

std::string format_per_roster_spot(double thousands) {
  if (thousands >= 100.0) return format_fixed(std::round(thousands), 0);
  std::string s = format_fixed(std::round(thousands * 10.0) / 10.0, 1);
  if (s.size() >= 2 && s.ends_with(".0")) s.resize(s.size() - 2);
  return s;
}

std::vector<LeagueConfig> load_league_config(std::istream& in, const std::string& source) {
  const auto doc = csv::read(in, source);
  csv::expect_header(doc, {"year", "teams", "roster_size"});
  if (doc.rows.empty()) throw ParseError(source, doc.header_line, "no league rows");
  std::vector<LeagueConfig> out;
  for (const auto& row : doc.rows) {
    LeagueConfig c;
    c.year = static_cast<Year>(csv::parse_integer(doc, row, 0));
    c.teams = static_cast<int>(csv::parse_integer(doc, row, 1));
    c.roster_size = static_cast<int>(csv::parse_integer(doc, row, 2));
    if (c.teams < 1 || c.roster_size < 1) {
      throw ParseError(source, row.line, "teams and roster_size must be positive");
    }
    out.push_back(c);
  }
  return out;
}

std::vector<LeagueConfig> load_league_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return load_league_config(in, path);
}

std::vector<LeagueSeason> join_league(const PopulationTable& table,
                                      const std::vector<LeagueConfig>& configs) {
  std::vector<LeagueSeason> out;
  for (const auto& c : configs) {
    const PopulationRecord* match = nullptr;
    for (const auto& r : table.records()) {
      if (r.period_end_year == c.year) match = &r;
    }
    if (!match) {
      throw ConfigError("league year " + std::to_string(c.year) +
                        " has no population record");
    }
    out.push_back(LeagueSeason{c.year, match->population, c.teams, c.roster_size});
  }
  return out;
}

}  // namespace eraodds
