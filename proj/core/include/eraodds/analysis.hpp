#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "eraodds/population.hpp"
#include "eraodds/rankings.hpp"
#include "eraodds/tailprob.hpp"

namespace eraodds {

/// How surprising is it that `list`'s top `depth` holds so many players whose
/// careers started by `cutoff_year`, if talent were spread evenly over the
/// (optionally weighted) eligible population?
struct OverrepQuery {
  const RankedList& list;
  int depth = 10;
  Year cutoff_year = 1950;
  const WeightRegime* regime = nullptr;
};

struct OverrepReport {
  std::string source;
  std::string regime;  ///< empty when unweighted
  int depth = 0;
  Year cutoff_year = 0;
  int early_count = 0;
  double proportion_used = 0.0;
  double tail_probability = 0.0;
  Chance chance;
};

/// Throws ValidationError if a player within `depth` started outside the
/// table's covered span, and propagates component errors.
[[nodiscard]] OverrepReport analyze(const OverrepQuery& query, const PopulationTable& table);

/// One report per (regime, depth, list): regimes outermost in input order,
/// then depths in input order, then lists in input order.
[[nodiscard]] std::vector<OverrepReport> sensitivity_matrix(std::span<const RankedList> lists,
                                                            std::span<const WeightRegime> regimes,
                                                            std::span<const int> depths,
                                                            Year cutoff_year,
                                                            const PopulationTable& table);

/// An externally supplied early-era tally for a list of the given depth.
struct EarlyCount {
  int depth = 0;
  int early_count = 0;
};

/// Recomputes tail probabilities when the eligible pool stops at
/// `pool_cutoff_year`: p = population through `era_cutoff_year` divided by the
/// prorated population through `pool_cutoff_year`. A pool cutoff of 1999
/// therefore counts 9/10 of the decade ending in 2000.
///
/// Throws DomainError if pool_cutoff_year < era_cutoff_year.
[[nodiscard]] std::vector<OverrepReport> bridge_check(std::span<const EarlyCount> counts,
                                                      Year pool_cutoff_year,
                                                      Year era_cutoff_year,
                                                      const PopulationTable& table);

/// Empirical upper tails from simulated Binomial(depth, p) draws.
struct MonteCarloEstimate {
  int depth = 0;
  double p = 0.0;
  std::int64_t trials = 0;
  std::vector<double> tail;  ///< tail[k] estimates P(X >= k), k = 0..depth

  /// sqrt(t (1 - t) / trials) at the estimate t = tail[k].
  [[nodiscard]] double standard_error(int k) const;
};

/// Each trial draws `depth` Bernoulli(p) variables from a 64-bit Mersenne
/// Twister seeded with `seed`; uniforms use the top 53 bits, so the result is
/// identical on every platform.
[[nodiscard]] MonteCarloEstimate monte_carlo_oracle(int depth, double p, std::int64_t trials,
                                                    std::uint64_t seed);

}  // namespace eraodds
