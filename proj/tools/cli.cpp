#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "eraodds/eraodds.hpp"

#ifndef ERAODDS_DEFAULT_DATA_DIR
#define ERAODDS_DEFAULT_DATA_DIR "data"
#endif

namespace eraodds::cli {
namespace {

namespace fs = std::filesystem;

std::string or_default(const std::string& given, const RunConfig& c, const std::string& rel) {
  return given.empty() ? (fs::path(c.data_dir) / rel).string() : given;
}

std::vector<RankedList> load_lists(const RunConfig& c) {
  std::vector<std::string> paths = c.list_paths;
  if (paths.empty()) {
    for (const char* name : {"ranker", "bwar", "fwar", "espn"}) {
      paths.push_back((fs::path(c.data_dir) / "lists" / (std::string(name) + ".csv")).string());
    }
  }
  std::vector<RankedList> lists;
  for (const auto& p : paths) lists.push_back(load_ranked_list(p));
  return lists;
}

PopulationTable population(const RunConfig& c) {
  return load_population_table(or_default(c.population_path, c, "population.csv"));
}

std::vector<WeightRegime> regimes(const RunConfig& c) {
  return load_weight_regimes(or_default(c.weights_path, c, "weights.csv"));
}

const WeightRegime& find_regime(const std::vector<WeightRegime>& all, const std::string& name) {
  const auto it =
      std::find_if(all.begin(), all.end(), [&](const auto& r) { return r.name == name; });
  if (it == all.end()) throw ConfigError("no weight regime named '" + name + "'");
  return *it;
}

std::string shortest(double v) { return fmt::format("{}", v); }

void run_proportion(const RunConfig& c, std::ostream& out) {
  const auto table = population(c);
  std::vector<WeightRegime> weights;
  if (c.weighted) weights = regimes(c);
  if (!c.regime.empty()) {
    const auto all = regimes(c);
    weights = {find_regime(all, c.regime)};
  }

  Tabular t;
  if (c.all_years) {
    t.columns = {"year", "population", "proportion"};
    for (const auto& w : weights) t.columns.push_back(w.name);
    for (const auto& r : table.records()) {
      std::vector<Cell> row{number_cell(std::to_string(r.period_end_year)),
                            number_cell(format_fixed(r.population, 2)),
                            number_cell(format_fixed(cumulative_proportion(table, r.period_end_year), 3))};
      for (const auto& w : weights) {
        row.push_back(number_cell(
            format_fixed(weighted_cumulative_proportion(table, w, r.period_end_year), 3)));
      }
      t.rows.push_back(std::move(row));
    }
  } else {
    t.columns = {"cutoff", "regime", "proportion"};
    t.rows.push_back({number_cell(std::to_string(c.cutoff_year)), text_cell("none"),
                      number_cell(format_fixed(cumulative_proportion(table, c.cutoff_year), 3))});
    for (const auto& w : weights) {
      t.rows.push_back(
          {number_cell(std::to_string(c.cutoff_year)), text_cell(w.name),
           number_cell(format_fixed(weighted_cumulative_proportion(table, w, c.cutoff_year), 3))});
    }
  }
  render(out, t, c.format);
}

void run_tail(const RunConfig& c, std::ostream& out) {
  const double prob = binomial_tail({c.n, c.k, c.p});
  Tabular t;
  t.columns = {"n", "k", "p", "probability", "chance"};
  std::vector<Cell> row{number_cell(std::to_string(c.n)), number_cell(std::to_string(c.k)),
                        number_cell(shortest(c.p)), number_cell(format_significant(prob)),
                        text_cell(prob > 0.0 ? chance_format(prob).display : "-")};
  if (c.trials > 0) {
    const auto est = monte_carlo_oracle(c.n, c.p, c.trials, c.seed);
    t.columns.insert(t.columns.end(), {"simulated", "standard_error", "trials", "seed"});
    row.push_back(number_cell(format_significant(est.tail[static_cast<std::size_t>(c.k)])));
    row.push_back(number_cell(format_significant(est.standard_error(c.k))));
    row.push_back(number_cell(std::to_string(c.trials)));
    row.push_back(number_cell(std::to_string(c.seed)));
  }
  t.rows.push_back(std::move(row));
  render(out, t, c.format);
}

void run_analyze(const RunConfig& c, std::ostream& out) {
  const auto table = population(c);
  const auto lists = load_lists(c);
  std::vector<WeightRegime> all;
  const WeightRegime* regime = nullptr;
  if (!c.regime.empty()) {
    all = regimes(c);
    regime = &find_regime(all, c.regime);
  }
  std::vector<OverrepReport> reports;
  for (const int depth : c.depths) {
    for (const auto& list : lists) {
      reports.push_back(analyze(OverrepQuery{list, depth, c.cutoff_year, regime}, table));
    }
  }
  render_reports(out, reports, c.format);
}

void run_sensitivity(const RunConfig& c, std::ostream& out) {
  const auto table = population(c);
  const auto lists = load_lists(c);
  auto all = regimes(c);
  if (!c.regime.empty()) all = {find_regime(all, c.regime)};
  const auto reports = sensitivity_matrix(lists, all, c.depths, c.cutoff_year, table);
  render_reports(out, reports, c.format);
}

std::vector<EarlyCount> parse_counts(const std::string& spec) {
  std::vector<EarlyCount> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      std::size_t used = 0;
      const int depth = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string rest = item.substr(colon + 1);
      const int k = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(item);
      out.push_back({depth, k});
    } catch (const std::logic_error&) {
      throw ConfigError("--counts entry '" + item + "' is not depth:count");
    }
  }
  if (out.empty()) throw ConfigError("--counts is empty");
  return out;
}

void run_bridge(const RunConfig& c, std::ostream& out) {
  const auto table = population(c);
  const auto counts = parse_counts(c.counts);
  const auto reports = bridge_check(counts, c.pool_cutoff_year, c.cutoff_year, table);
  render_reports(out, reports, c.format);
}

void run_dilution(const RunConfig& c, std::ostream& out) {
  const auto table = population(c);
  const auto seasons = join_league(table, load_league_config(or_default(c.league_path, c, "league.csv")));
  Tabular t;
  t.columns = {"year", "eligible_population", "teams", "roster_size", "per_roster_spot"};
  for (const auto& s : seasons) {
    t.rows.push_back({number_cell(std::to_string(s.year)),
                      number_cell(format_fixed(s.eligible_population, 2)),
                      number_cell(std::to_string(s.teams)),
                      number_cell(std::to_string(s.roster_size)),
                      number_cell(format_per_roster_spot(per_roster_spot(s)))});
  }
  render(out, t, c.format);
}

void run_detrend(const RunConfig& c, std::ostream& out) {
  const auto stats = load_season_stats(or_default(c.detrend_path, c, "detrend_sample.csv"));
  std::vector<double> league;
  for (const auto& s : stats) league.push_back(s.league_average);
  const DetrendContext ctx = c.historic_average ? DetrendContext(*c.historic_average)
                                                : DetrendContext::from_league_averages(league);
  Tabular t;
  t.columns = {"season", "value", "league_average", "historic_average", "detrended"};
  const std::string hist = shortest(ctx.historic_average());
  for (const auto& s : stats) {
    t.rows.push_back({number_cell(std::to_string(s.season)), number_cell(shortest(s.value)),
                      number_cell(shortest(s.league_average)), number_cell(hist),
                      number_cell(shortest(detrend_value(s.value, s.league_average,
                                                         ctx.historic_average())))});
  }
  double raw = 0.0;
  for (const auto& s : stats) raw += s.value;
  t.rows.push_back({text_cell("career"), number_cell(shortest(raw)), text_cell("-"),
                    number_cell(hist), number_cell(shortest(detrend_career(stats, ctx)))});
  render(out, t, c.format);
}

}  // namespace

void run(const RunConfig& c, std::ostream& out) {
  if (c.subcommand == "proportion") return run_proportion(c, out);
  if (c.subcommand == "tail") return run_tail(c, out);
  if (c.subcommand == "analyze") return run_analyze(c, out);
  if (c.subcommand == "sensitivity") return run_sensitivity(c, out);
  if (c.subcommand == "bridge") return run_bridge(c, out);
  if (c.subcommand == "dilution") return run_dilution(c, out);
  if (c.subcommand == "detrend") return run_detrend(c, out);
  throw ConfigError("unknown subcommand '" + c.subcommand + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  c.data_dir = ERAODDS_DEFAULT_DATA_DIR;
  std::string format = "table";

  CLI::App app{"Era overrepresentation odds for all-time greatest lists"};
  app.name("eraodds");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--data-dir", c.data_dir, "Directory holding the bundled data files");
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  const auto population_opt = [&](CLI::App* sub) {
    sub->add_option("--population", c.population_path, "Population table file");
  };
  const auto cutoff_opt = [&](CLI::App* sub) {
    sub->add_option("--cutoff", c.cutoff_year, "Early-era cutoff year (inclusive)");
  };
  const auto list_opts = [&](CLI::App* sub) {
    sub->add_option("--list", c.list_paths, "Ranked list file (repeatable)");
    sub->add_option("--depths", c.depths, "List depths")->delimiter(',');
  };

  auto* proportion = app.add_subcommand("proportion", "Cumulative eligible-population proportion");
  population_opt(proportion);
  cutoff_opt(proportion);
  proportion->add_option("--weights", c.weights_path, "Weight regime file");
  proportion->add_flag("--weighted", c.weighted, "Also report every weight regime");
  proportion->add_option("--regime", c.regime, "Report this weight regime");
  proportion->add_flag("--all-years", c.all_years, "One row per population record");

  auto* tail = app.add_subcommand("tail", "Binomial upper-tail probability P(X >= k)");
  tail->add_option("--n", c.n, "Number of trials (list depth)")->required();
  tail->add_option("--k", c.k, "Threshold count")->required();
  tail->add_option("--p", c.p, "Success probability")->required();
  tail->add_option("--trials", c.trials, "Also simulate with this many Monte Carlo trials");
  tail->add_option("--seed", c.seed, "Monte Carlo seed");

  auto* analyze_cmd = app.add_subcommand("analyze", "Overrepresentation report per list and depth");
  population_opt(analyze_cmd);
  cutoff_opt(analyze_cmd);
  list_opts(analyze_cmd);
  analyze_cmd->add_option("--weights", c.weights_path, "Weight regime file");
  analyze_cmd->add_option("--regime", c.regime, "Weight the population by this regime");

  auto* sensitivity = app.add_subcommand("sensitivity", "Reports under every weight regime");
  population_opt(sensitivity);
  cutoff_opt(sensitivity);
  list_opts(sensitivity);
  sensitivity->add_option("--weights", c.weights_path, "Weight regime file");
  sensitivity->add_option("--regime", c.regime, "Restrict to one regime");

  auto* bridge = app.add_subcommand("bridge", "Recompute with the eligible pool ending early");
  population_opt(bridge);
  cutoff_opt(bridge);
  bridge->add_option("--pool-cutoff", c.pool_cutoff_year, "Last year of the eligible pool");
  bridge->add_option("--counts", c.counts, "depth:early_count pairs, comma separated");

  auto* dilution = app.add_subcommand("dilution", "Eligible population per roster spot");
  population_opt(dilution);
  dilution->add_option("--league", c.league_path, "League configuration file");

  auto* detrend = app.add_subcommand("detrend", "Scale seasonal values by historic/league average");
  detrend->add_option("--input", c.detrend_path, "season,value,league_average file");
  detrend->add_option("--historic-average", c.historic_average, "Override the historic average");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  for (const auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  try {
    c.format = parse_output_format(format);
    std::ostringstream buffer;
    run(c, buffer);
    out << buffer.str();
    return kOk;
  } catch (const InputError& e) {
    err << "eraodds " << c.subcommand << ": invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const DomainError& e) {
    err << "eraodds " << c.subcommand << ": " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    err << "eraodds " << c.subcommand << ": internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace eraodds::cli
