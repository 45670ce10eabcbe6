#include "falpha/io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

namespace falpha {
namespace {

TEST(ParseDistribution, Json) {
  const auto d = parse_distribution(R"({"probs": [0.25, 0.75]})");
  EXPECT_EQ(d.size(), 2);
  EXPECT_DOUBLE_EQ(d[0], 0.25);
}

TEST(ParseDistribution, Csv) {
  const auto d = parse_distribution("0.25, 0.5,0.25\n");
  EXPECT_EQ(d.size(), 3);
  EXPECT_DOUBLE_EQ(d[1], 0.5);
}

TEST(ParseDistribution, RejectsMultiLineCsv) {
  EXPECT_THROW(parse_distribution("0.5,0.5\n0.5,0.5\n"), BadParams);
}

TEST(ParseDistribution, NamesOffendingJsonField) {
  try {
    parse_distribution(R"({"probs": [0.5, "x"]})", "fixture.json");
    FAIL() << "expected BadParams";
  } catch (const BadParams& e) {
    EXPECT_NE(std::string(e.what()).find("probs[1]"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("fixture.json"), std::string::npos);
  }
}

TEST(ParseDistribution, NamesOffendingCsvField) {
  try {
    parse_distribution("0.5,oops\n", "fixture.csv");
    FAIL() << "expected BadParams";
  } catch (const BadParams& e) {
    EXPECT_NE(std::string(e.what()).find("field 2"), std::string::npos);
  }
}

TEST(ParseDistribution, MissingProbsKey) {
  EXPECT_THROW(parse_distribution(R"({"rows": [[1.0]]})"), BadParams);
}

TEST(ParseChannel, Json) {
  const auto c = parse_channel(R"({"rows": [[0.5, 0.5], [0.0, 1.0]]})");
  EXPECT_EQ(c.input_size(), 2);
  EXPECT_EQ(c.output_size(), 2);
  EXPECT_EQ(c.at(1, 0), 0.0);
}

TEST(ParseChannel, CsvSkipsBlankLines) {
  const auto c = parse_channel("0.5,0.5\n\n0.25,0.75\n");
  EXPECT_EQ(c.input_size(), 2);
  EXPECT_DOUBLE_EQ(c.at(1, 1), 0.75);
}

TEST(ParseChannel, PropagatesValidationErrors) {
  EXPECT_THROW(parse_channel("0.5,0.6\n"), NotNormalized);
  EXPECT_THROW(parse_channel(R"({"rows": [[0.5, -0.5]]})"), NegativeMass);
}

TEST(ParseChannel, InvalidJsonMentionsOrigin) {
  try {
    parse_channel("{not json", "broken.json");
    FAIL() << "expected BadParams";
  } catch (const BadParams& e) {
    EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
  }
}

TEST(LoadFiles, RoundTripThroughDisk) {
  const std::string dist_path = ::testing::TempDir() + "falpha_dist.json";
  const std::string chan_path = ::testing::TempDir() + "falpha_chan.csv";
  {
    std::ofstream out(dist_path);
    out << R"({"probs": [0.1, 0.9]})";
  }
  {
    std::ofstream out(chan_path);
    out << "1,0\n0.5,0.5\n";
  }
  const auto d = load_distribution(dist_path);
  const auto c = load_channel(chan_path);
  EXPECT_DOUBLE_EQ(d[1], 0.9);
  EXPECT_DOUBLE_EQ(c.at(1, 0), 0.5);
  std::remove(dist_path.c_str());
  std::remove(chan_path.c_str());
}

TEST(LoadFiles, MissingFileThrows) {
  EXPECT_THROW(load_distribution("/nonexistent/falpha.json"), BadParams);
}

}  // namespace
}  // namespace falpha
