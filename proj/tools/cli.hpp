#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eraodds/report.hpp"

namespace eraodds::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kInvalidInput = 3,
  kDomain = 4,
};

struct RunConfig {
  std::string subcommand;
  std::string data_dir;
  std::string population_path;
  std::string weights_path;
  std::vector<std::string> list_paths;
  std::string league_path;
  std::string detrend_path;
  OutputFormat format = OutputFormat::table;
  int cutoff_year = 1950;
  int pool_cutoff_year = 1999;
  std::vector<int> depths{10, 25};
  std::string regime;
  bool weighted = false;
  bool all_years = false;
  std::string counts = "10:6,25:10";
  int n = 0;
  int k = 0;
  double p = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 20190601;
  std::optional<double> historic_average;
};

/// Executes an already-parsed configuration. Library errors propagate.
void run(const RunConfig& config, std::ostream& out);

/// Parses `args` (without the program name), runs, and maps failures to exit
/// codes with a message on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eraodds::cli
