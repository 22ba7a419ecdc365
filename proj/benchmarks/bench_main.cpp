#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "eraodds/eraodds.hpp"

namespace {

using namespace eraodds;

std::string data(const std::string& rel) { return std::string(ERAODDS_BENCH_DATA_DIR) + "/" + rel; }

void BM_BinomialTail(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(binomial_tail({n, n / 3, 0.18696}));
  }
}
BENCHMARK(BM_BinomialTail)->Arg(10)->Arg(25)->Arg(100)->Arg(1000);

void BM_CumulativeProportion(benchmark::State& state) {
  const auto table = load_population_table(data("population.csv"));
  Year y = table.first_year();
  for (auto _ : state) {
    benchmark::DoNotOptimize(cumulative_proportion(table, y));
    if (++y > table.last_year()) y = table.first_year();
  }
}
BENCHMARK(BM_CumulativeProportion);

void BM_SensitivityMatrix(benchmark::State& state) {
  const auto table = load_population_table(data("population.csv"));
  const auto regimes = load_weight_regimes(data("weights.csv"));
  std::vector<RankedList> lists;
  for (const char* n : {"ranker", "bwar", "fwar", "espn"}) {
    lists.push_back(load_ranked_list(data(std::string("lists/") + n + ".csv")));
  }
  const std::vector<int> depths{10, 25};
  for (auto _ : state) {
    benchmark::DoNotOptimize(sensitivity_matrix(lists, regimes, depths, 1950, table));
  }
}
BENCHMARK(BM_SensitivityMatrix);

void BM_MonteCarloOracle(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(monte_carlo_oracle(25, 0.18696, state.range(0), 42));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarloOracle)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
