#pragma once

#include <string>
#include <vector>

#include "eraodds/eraodds.hpp"

namespace eraodds::test {

inline std::string data_path(const std::string& rel) {
  return std::string(ERAODDS_TEST_DATA_DIR) + "/" + rel;
}

inline const PopulationTable& bundled_table() {
  static const PopulationTable table = load_population_table(data_path("population.csv"));
  return table;
}

inline const std::vector<WeightRegime>& bundled_regimes() {
  static const auto regimes = load_weight_regimes(data_path("weights.csv"));
  return regimes;
}

inline const std::vector<RankedList>& bundled_lists() {
  static const std::vector<RankedList> lists = [] {
    std::vector<RankedList> out;
    for (const char* name : {"ranker", "bwar", "fwar", "espn"}) {
      out.push_back(load_ranked_list(data_path(std::string("lists/") + name + ".csv")));
    }
    return out;
  }();
  return lists;
}

inline const RankedList& bundled_list(const std::string& source) {
  for (const auto& l : bundled_lists()) {
    if (l.source() == source) return l;
  }
  throw std::out_of_range(source);
}

inline const WeightRegime& bundled_regime(const std::string& name) {
  for (const auto& r : bundled_regimes()) {
    if (r.name == name) return r;
  }
  throw std::out_of_range(name);
}

/// Relative difference, safe at zero.
inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace eraodds::test
