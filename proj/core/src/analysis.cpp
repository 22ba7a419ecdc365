#include "eraodds/analysis.hpp"

#include <cmath>
#include <random>

#include "eraodds/error.hpp"

namespace eraodds {
namespace {

void check_career_span(const RankedList& list, int depth, const PopulationTable& table) {
  const Year lo = table.records().front().period_start_year();
  const Year hi = table.last_year();
  for (int i = 0; i < depth && i < list.size(); ++i) {
    const auto& e = list.entries()[static_cast<std::size_t>(i)];
    if (e.career_start_year <= lo || e.career_start_year > hi) {
      throw ValidationError("list '" + list.source() + "': " + e.name + " (rank " +
                            std::to_string(e.rank) + ") started in " +
                            std::to_string(e.career_start_year) +
                            ", outside the population table's span " + std::to_string(lo + 1) +
                            ".." + std::to_string(hi));
    }
  }
}

OverrepReport make_report(std::string source, std::string regime, int depth, Year cutoff,
                          int early, double p) {
  OverrepReport r;
  r.source = std::move(source);
  r.regime = std::move(regime);
  r.depth = depth;
  r.cutoff_year = cutoff;
  r.early_count = early;
  r.proportion_used = p;
  r.tail_probability = binomial_tail({depth, early, p});
  r.chance = chance_format(r.tail_probability);
  return r;
}

}  // namespace

OverrepReport analyze(const OverrepQuery& query, const PopulationTable& table) {
  const double p = query.regime
                       ? weighted_cumulative_proportion(table, *query.regime, query.cutoff_year)
                       : cumulative_proportion(table, query.cutoff_year);
  const int early = count_early(query.list, query.depth, query.cutoff_year);
  check_career_span(query.list, query.depth, table);
  return make_report(query.list.source(), query.regime ? query.regime->name : std::string{},
                     query.depth, query.cutoff_year, early, p);
}

std::vector<OverrepReport> sensitivity_matrix(std::span<const RankedList> lists,
                                              std::span<const WeightRegime> regimes,
                                              std::span<const int> depths, Year cutoff_year,
                                              const PopulationTable& table) {
  std::vector<OverrepReport> out;
  out.reserve(lists.size() * regimes.size() * depths.size());
  for (const auto& regime : regimes) {
    for (const int depth : depths) {
      for (const auto& list : lists) {
        out.push_back(analyze(OverrepQuery{list, depth, cutoff_year, &regime}, table));
      }
    }
  }
  return out;
}

std::vector<OverrepReport> bridge_check(std::span<const EarlyCount> counts,
                                        Year pool_cutoff_year, Year era_cutoff_year,
                                        const PopulationTable& table) {
  if (pool_cutoff_year < era_cutoff_year) {
    throw DomainError("pool cutoff " + std::to_string(pool_cutoff_year) +
                      " precedes era cutoff " + std::to_string(era_cutoff_year));
  }
  const double p =
      table.population_through(era_cutoff_year) / table.population_through(pool_cutoff_year);
  std::vector<OverrepReport> out;
  for (const auto& c : counts) {
    out.push_back(make_report("pool-" + std::to_string(pool_cutoff_year), {}, c.depth,
                              era_cutoff_year, c.early_count, p));
  }
  return out;
}

double MonteCarloEstimate::standard_error(int k) const {
  const double t = tail.at(static_cast<std::size_t>(k));
  return std::sqrt(t * (1.0 - t) / static_cast<double>(trials));
}

MonteCarloEstimate monte_carlo_oracle(int depth, double p, std::int64_t trials,
                                      std::uint64_t seed) {
  if (depth < 1 || depth > kMaxTailDepth) throw DomainError("oracle depth outside 1..1000");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("oracle probability outside [0, 1]");
  if (trials < 1) throw DomainError("oracle needs at least one trial");

  std::mt19937_64 rng(seed);
  std::vector<std::int64_t> hits(static_cast<std::size_t>(depth) + 1, 0);
  for (std::int64_t t = 0; t < trials; ++t) {
    int successes = 0;
    for (int i = 0; i < depth; ++i) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      successes += u < p ? 1 : 0;
    }
    ++hits[static_cast<std::size_t>(successes)];
  }

  MonteCarloEstimate est{depth, p, trials, std::vector<double>(hits.size(), 0.0)};
  std::int64_t at_least = 0;
  for (int k = depth; k >= 0; --k) {
    at_least += hits[static_cast<std::size_t>(k)];
    est.tail[static_cast<std::size_t>(k)] =
        static_cast<double>(at_least) / static_cast<double>(trials);
  }
  return est;
}

}  // namespace eraodds
