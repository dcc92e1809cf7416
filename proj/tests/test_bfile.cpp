#include <gtest/gtest.h>

#include <sstream>

#include "trigverify/bfile.hpp"
#include "trigverify/errors.hpp"

namespace trigverify {
namespace {

const std::string kFixtures = TRIGVERIFY_FIXTURE_DIR;

SequenceTable parse(const std::string& text) {
  std::istringstream in(text);
  return parse_bfile(in, "test");
}

int parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(ParseBfile, CommentsBlankLinesAndCrlf) {
  const auto t = parse("# header\n\n1 5\r\n2 231\n# mid\n3 14586\n");
  ASSERT_EQ(t.entries.size(), 3u);
  EXPECT_EQ(t.entries[2], (SequenceEntry{3, 14586}));
  EXPECT_EQ(t.name, "test");
}

TEST(ParseBfile, HugeValues) {
  const auto t = parse("40 123456789012345678901234567890123456789\n");
  EXPECT_EQ(t.entries[0].value, Integer("123456789012345678901234567890123456789"));
}

TEST(ParseBfile, MalformedLinesReportLineNumber) {
  EXPECT_EQ(parse_error_line("1 5\n2\n"), 2);
  EXPECT_EQ(parse_error_line("# c\n1 5 7\n"), 2);
  EXPECT_EQ(parse_error_line("1 5\n2 2.5\n"), 2);
  EXPECT_EQ(parse_error_line("x 5\n"), 1);
}

TEST(ParseBfile, NonMonotonicIndices) {
  EXPECT_THROW(parse("1 5\n1 5\n"), NonMonotonic);
  EXPECT_THROW(parse("2 5\n1 5\n"), NonMonotonic);
  try {
    parse("1 5\n2 231\n2 231\n");
  } catch (const NonMonotonic& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(LoadBfile, NameFromFileStem) {
  EXPECT_EQ(load_bfile(kFixtures + "/A000984.txt").name, "A000984");
  EXPECT_THROW(load_bfile(kFixtures + "/does_not_exist.txt"), std::runtime_error);
}

TEST(ParseGenerator, Names) {
  EXPECT_EQ(parse_generator("S"), Generator::S);
  EXPECT_EQ(parse_generator("C(6n,3n)"), Generator::Binomial6n3n);
  EXPECT_EQ(parse_generator("central-binomial"), Generator::CentralBinomial);
  EXPECT_THROW(parse_generator("fibonacci"), std::invalid_argument);
}

struct FixtureCase {
  const char* file;
  Generator generator;
};

class CrosscheckFixture : public ::testing::TestWithParam<FixtureCase> {};

TEST_P(CrosscheckFixture, AllRowsMatch) {
  const auto table = load_bfile(kFixtures + "/" + GetParam().file);
  const auto report = crosscheck(table, GetParam().generator);
  EXPECT_TRUE(report.all_pass()) << to_text(report);
  EXPECT_EQ(report.items().size(), table.entries.size());
}

INSTANTIATE_TEST_SUITE_P(Fixtures, CrosscheckFixture,
                         ::testing::Values(FixtureCase{"A000984.txt", Generator::CentralBinomial},
                                           FixtureCase{"A005809.txt", Generator::Binomial3nN},
                                           FixtureCase{"A066802.txt", Generator::Binomial6n3n},
                                           FixtureCase{"A176898.txt", Generator::S}));

TEST(Crosscheck, FalsifiedFixtureHasExactlyOneMismatch) {
  const auto report = crosscheck(load_bfile(kFixtures + "/A000984_falsified.txt"), Generator::CentralBinomial);
  EXPECT_EQ(report.summary().mismatch, 1u);
  EXPECT_EQ(report.summary().pass, report.items().size() - 1);
  for (const auto& item : report.items()) {
    if (item.status == Status::Mismatch) {
      EXPECT_EQ(item.params, "n=7");
    }
  }
}

TEST(Crosscheck, PrintedValuesFlagTheMisprint) {
  const auto report = crosscheck(load_bfile(kFixtures + "/printed_s_values.txt"), Generator::S);
  EXPECT_EQ(report.summary().mismatch, 1u);
  for (const auto& item : report.items()) {
    if (item.status != Status::Mismatch) continue;
    EXPECT_EQ(item.params, "n=3");
    EXPECT_EQ(item.details.at("computed"), "14586");
    EXPECT_EQ(item.details.at("file"), "14568");
    EXPECT_TRUE(item.details.contains("note"));
  }
}

TEST(Crosscheck, EmptyTableAndBadIndex) {
  EXPECT_THROW(crosscheck(parse("# nothing\n"), Generator::S), std::invalid_argument);
  const auto report = crosscheck(parse("-1 5\n"), Generator::S);
  EXPECT_EQ(report.summary().error, 1u);
}

}  // namespace
}  // namespace trigverify
