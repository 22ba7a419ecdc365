#include <gtest/gtest.h>

#include <sstream>

#include "eraodds/csv.hpp"
#include "eraodds/error.hpp"

namespace eraodds {
namespace {

csv::Document parse(const std::string& text, std::size_t min_columns = 0) {
  std::istringstream in(text);
  return csv::read(in, "mem", min_columns);
}

TEST(Csv, SkipsBlankAndCommentLinesAndTrims) {
  const auto doc = parse("# comment\n\n a , b \n1,  2\r\n\n3,4\n");
  ASSERT_EQ(doc.header.size(), 2u);
  EXPECT_EQ(doc.header[0], "a");
  ASSERT_EQ(doc.rows.size(), 2u);
  EXPECT_EQ(doc.rows[0].line, 4u);
  EXPECT_EQ(doc.rows[0].fields[1], "2");
  EXPECT_EQ(doc.rows[1].line, 6u);
}

TEST(Csv, QuotedFields) {
  const auto doc = parse("name,x\n\"Ruth, Babe\",1\n\"say \"\"hi\"\"\",2\n");
  EXPECT_EQ(doc.rows[0].fields[0], "Ruth, Babe");
  EXPECT_EQ(doc.rows[1].fields[0], "say \"hi\"");
  EXPECT_EQ(csv::escape("Ruth, Babe"), "\"Ruth, Babe\"");
  EXPECT_EQ(csv::escape("plain"), "plain");
}

TEST(Csv, EmptyDocumentIsParseError) {
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("\n# only comments\n"), ParseError);
}

TEST(Csv, RaggedRowReportsLine) {
  try {
    parse("a,b\n1,2\n3\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.source(), "mem");
  }
  EXPECT_NO_THROW(parse("a,b,c\n1,2\n", 2));
  EXPECT_THROW(parse("a,b,c\n1,2,3,4\n", 2), ParseError);
}

TEST(Csv, UnterminatedQuote) { EXPECT_THROW(parse("a\n\"open\n"), ParseError); }

TEST(Csv, StrictNumbers) {
  const auto doc = parse("n,x\n12,1.5\n12a,1.5x\n,\n");
  EXPECT_EQ(csv::parse_integer(doc, doc.rows[0], 0), 12);
  EXPECT_DOUBLE_EQ(csv::parse_real(doc, doc.rows[0], 1), 1.5);
  EXPECT_THROW(csv::parse_integer(doc, doc.rows[1], 0), ParseError);
  EXPECT_THROW(csv::parse_real(doc, doc.rows[1], 1), ParseError);
  EXPECT_THROW(csv::parse_integer(doc, doc.rows[2], 0), ParseError);
}

TEST(Csv, HeaderCheckIsCaseInsensitive) {
  const auto doc = parse("Year,Population_Millions\n1,2\n");
  EXPECT_NO_THROW(csv::expect_header(doc, {"year", "population_millions"}));
  EXPECT_THROW(csv::expect_header(doc, {"year", "teams"}), ParseError);
  EXPECT_EQ(doc.column("POPULATION_MILLIONS"), 1u);
}

}  // namespace
}  // namespace eraodds
