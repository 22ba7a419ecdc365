#pragma once

#include <istream>
#include <string>
#include <vector>

#include "eraodds/population.hpp"

namespace eraodds {

struct LeagueSeason {
  Year year = 0;
  double eligible_population = 0.0;  ///< millions
  int teams = 0;
  int roster_size = 0;
};

/// Thousands of eligible people per roster spot:
/// eligible_population * 10^6 / (teams * roster_size) / 10^3.
/// Throws DomainError for non-positive teams, roster size or population.
[[nodiscard]] double per_roster_spot(const LeagueSeason& season);

/// One decimal, ".0" dropped ("21.4", "29"); values of 100 or more are
/// shown as whole numbers.
[[nodiscard]] std::string format_per_roster_spot(double thousands);

struct LeagueConfig {
  Year year = 0;
  int teams = 0;
  int roster_size = 0;
};

/// `year,teams,roster_size`.
std::vector<LeagueConfig> load_league_config(std::istream& in, const std::string& source);
std::vector<LeagueConfig> load_league_config(const std::string& path);

/// Attaches each configuration's eligible population from the table record
/// with the same period_end_year; throws ConfigError when there is none.
[[nodiscard]] std::vector<LeagueSeason> join_league(const PopulationTable& table,
                                                    const std::vector<LeagueConfig>& configs);

}  // namespace eraodds
