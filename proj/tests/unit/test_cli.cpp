#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "unit/fixtures.hpp"

namespace eraodds {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(ERAODDS_TEST_GOLDEN_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("eraodds_test_" + name);
  std::ofstream(path) << text;
  return path;
}

TEST(Cli, ProportionAt1950) {
  const auto r = run({"proportion", "--cutoff", "1950"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "cutoff  regime  proportion\n  1950  none         0.187\n");
}

TEST(Cli, TailFromZeroIsOne) {
  const auto r = run({"tail", "--n", "10", "--k", "0", "--p", "0.5", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "n,k,p,probability,chance\n10,0,0.5,1,1 in 1\n");
}

TEST(Cli, TailWithSimulation) {
  const auto r = run({"tail", "--n", "10", "--k", "6", "--p", "0.18696", "--trials", "10000",
                      "--seed", "7", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc[0]["probability"], 0.00448);
  EXPECT_EQ(doc[0]["trials"], 10000);
  EXPECT_TRUE(doc[0].contains("simulated"));
}

TEST(Cli, GoldenReports) {
  EXPECT_EQ(run({"analyze"}).out, golden("analyze.txt"));
  EXPECT_EQ(run({"sensitivity"}).out, golden("sensitivity.txt"));
  EXPECT_EQ(run({"bridge"}).out, golden("bridge.txt"));
  EXPECT_EQ(run({"dilution"}).out, golden("dilution.txt"));
  EXPECT_EQ(run({"proportion", "--all-years", "--weighted"}).out, golden("proportion.txt"));
  EXPECT_EQ(run({"detrend"}).out, golden("detrend.txt"));
}

TEST(Cli, ByteDeterminism) {
  const std::vector<std::vector<std::string>> configs = {
      {"analyze", "--format", "json"},
      {"sensitivity", "--format", "csv"},
      {"bridge", "--format", "table"},
      {"dilution", "--format", "json"},
      {"detrend", "--format", "csv"},
      {"tail", "--n", "25", "--k", "15", "--p", "0.2", "--trials", "5000", "--seed", "3"},
      {"proportion", "--cutoff", "1999", "--weighted", "--format", "json"},
  };
  for (const auto& args : configs) {
    const auto a = run(args);
    const auto b = run(args);
    ASSERT_EQ(a.code, 0) << args[0] << ": " << a.err;
    EXPECT_EQ(a.out, b.out) << args[0];
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, AnalyzeWithRegimeAndExplicitList) {
  const auto r = run({"analyze", "--list", test::data_path("lists/espn.csv"), "--depths", "25",
                      "--regime", "w4", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("w4,espn,25,1950,11,0.275,0.0561,1 in 18,"), std::string::npos) << r.out;
}

TEST(Cli, DetrendOverride) {
  const auto path = temp_file("detrend.csv", "season,value,league_average\n1920,40,10\n");
  const auto r = run({"detrend", "--input", path.string(), "--historic-average", "5",
                      "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "season,value,league_average,historic_average,detrended\n"
            "1920,40,10,5,20\n"
            "career,40,-,5,20\n");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"tail", "--n", "10"}).code, cli::kUsage);
  EXPECT_EQ(run({"analyze", "--format", "xml"}).code, cli::kUsage);
  EXPECT_EQ(run({"analyze", "--cutoff", "abc"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, InputErrorsNameTheFile) {
  const auto missing = run({"analyze", "--population", "/nonexistent/pop.csv"});
  EXPECT_EQ(missing.code, cli::kInvalidInput);
  EXPECT_NE(missing.err.find("/nonexistent/pop.csv"), std::string::npos);

  const auto dup = temp_file("dup.csv", "rank,name,career_start_year\n1,A,1900\n1,B,1901\n");
  const auto r = run({"analyze", "--list", dup.string(), "--depths", "1"});
  EXPECT_EQ(r.code, cli::kInvalidInput);
  EXPECT_NE(r.err.find("duplicate rank 1"), std::string::npos) << r.err;

  const auto bad = temp_file("bad.csv", "year,population_millions\n1880,4.4\n1890,x\n");
  const auto b = run({"proportion", "--population", bad.string()});
  EXPECT_EQ(b.code, cli::kInvalidInput);
  EXPECT_NE(b.err.find(":3:"), std::string::npos) << b.err;

  EXPECT_EQ(run({"sensitivity", "--regime", "w9"}).code, cli::kInvalidInput);
  EXPECT_EQ(run({"bridge", "--counts", "10-6"}).code, cli::kInvalidInput);
}

TEST(Cli, DomainErrors) {
  EXPECT_EQ(run({"proportion", "--cutoff", "1800"}).code, cli::kDomain);
  EXPECT_EQ(run({"analyze", "--depths", "30"}).code, cli::kDomain);
  EXPECT_EQ(run({"bridge", "--pool-cutoff", "1940"}).code, cli::kDomain);
  EXPECT_EQ(run({"tail", "--n", "10", "--k", "11", "--p", "0.5"}).code, cli::kDomain);
  EXPECT_EQ(run({"tail", "--n", "10", "--k", "1", "--p", "2"}).code, cli::kDomain);
}

}  // namespace
}  // namespace eraodds
