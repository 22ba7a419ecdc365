#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "eraodds/error.hpp"
#include "eraodds/rankings.hpp"
#include "unit/fixtures.hpp"

namespace eraodds {
namespace {

using test::bundled_list;

TEST(Rankings, PublishedEarlyCounts) {
  struct Case {
    const char* source;
    int top10;
    int top25;
  };
  for (const Case c : {Case{"ranker", 7, 15}, Case{"bwar", 6, 15}, Case{"fwar", 6, 12},
                       Case{"espn", 5, 11}}) {
    EXPECT_EQ(count_early(bundled_list(c.source), 10, 1950), c.top10) << c.source;
    EXPECT_EQ(count_early(bundled_list(c.source), 25, 1950), c.top25) << c.source;
  }
}

TEST(Rankings, BoundaryYearDoesNotChangeBundledCounts) {
  // Inclusive (<= 1950) and exclusive (< 1950) era readings agree on the fixtures.
  for (const auto& list : test::bundled_lists()) {
    for (int depth : {10, 25}) {
      EXPECT_EQ(count_early(list, depth, 1950), count_early(list, depth, 1949)) << list.source();
    }
  }
}

TEST(Rankings, BundledFixtureShape) {
  const auto& bwar = bundled_list("bwar");
  EXPECT_EQ(bwar.size(), 25);
  EXPECT_EQ(bwar.entries().front().name, "Babe Ruth");
  EXPECT_EQ(bwar.source(), "bwar");
}

TEST(Rankings, EveryoneQualifiesAfterAllCareers) {
  for (const auto& list : test::bundled_lists()) {
    for (int d = 1; d <= list.size(); ++d) EXPECT_EQ(count_early(list, d, 3000), d);
  }
}

TEST(Rankings, DepthOutOfRange) {
  EXPECT_THROW((void)count_early(bundled_list("espn"), 26, 1950), DomainError);
  EXPECT_THROW((void)count_early(bundled_list("espn"), 0, 1950), DomainError);
}

RankedList load(const std::string& text) {
  std::istringstream in(text);
  return load_ranked_list(in, "mem.csv", "mem");
}

TEST(Rankings, LoaderRejectsBadFiles) {
  EXPECT_THROW(load(""), ParseError);
  EXPECT_THROW(load("rank,name,career_start_year\n"), ParseError);
  EXPECT_THROW(load("rank,player,year\n1,A,1900\n"), ParseError);
  try {
    load("rank,name,career_start_year\n1,A,1900\n2,B,1901\n3,C,1902\n3,D,1903\n");
    FAIL() << "expected duplicate rank";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate rank 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(load("rank,name,career_start_year\n1,A,1900\n3,B,1901\n"), ValidationError);
  EXPECT_THROW(load("rank,name,career_start_year\n1,A,1900\n2,A,1901\n"), ValidationError);
  try {
    load("rank,name,career_start_year\n1,A,1900\n2,B,19x1\n");
    FAIL() << "expected malformed year";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Rankings, LoaderAcceptsUnorderedRows) {
  const auto l = load("rank,name,career_start_year\n2,B,1950\n1,A,1900\n");
  EXPECT_EQ(l.entries()[0].name, "A");
  EXPECT_EQ(count_early(l, 2, 1950), 2);
}

TEST(RankingsProperty, RoundTripAndMonotoneCounts) {
  std::mt19937_64 rng(23);
  const std::vector<std::string> tricky = {"Plain", "Comma, Inside", "Quote \"Q\"", " padded "};
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<PlayerEntry> entries;
    for (int i = 1; i <= n; ++i) {
      entries.push_back({i, tricky[rng() % tricky.size()] + " #" + std::to_string(i),
                         1871 + static_cast<int>(rng() % 145)});
    }
    std::shuffle(entries.begin(), entries.end(), rng);
    const RankedList list("gen", entries);

    std::stringstream buf;
    write_ranked_list(buf, list);
    EXPECT_EQ(load_ranked_list(buf, "buf", "gen"), list);

    for (int d = 1; d <= n; ++d) {
      for (int y = 1870; y <= 2016; y += 7) {
        const int c = count_early(list, d, y);
        EXPECT_LE(c, d);
        if (d > 1) EXPECT_GE(c, count_early(list, d - 1, y));
        EXPECT_LE(c, count_early(list, d, y + 1));
      }
    }
  }
}

}  // namespace
}  // namespace eraodds
