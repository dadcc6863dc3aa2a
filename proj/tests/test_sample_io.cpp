#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "example_dataset.hpp"
#include "wcentropy/error.hpp"
#include "wcentropy/sample_io.hpp"
#include "wcentropy/serialize.hpp"

namespace wcentropy {
namespace {

TEST(SampleIoTest, BundledFixtureMatchesGrid) {
  const auto file = parse_sample_file(WCENTROPY_FIXTURE);
  ASSERT_EQ(file.values.size(), 50u);
  EXPECT_EQ(file.values.front(), 8.23);
  EXPECT_EQ(file.values.back(), 0.221);
  for (std::size_t i = 0; i < 50; ++i) EXPECT_EQ(file.values[i], testing::kExampleGrid[i]) << i;
  EXPECT_EQ(file.row_lengths, (std::vector<std::size_t>(5, 10)));
}

TEST(SampleIoTest, CommaSeparatedPair) {
  const auto file = parse_sample_text("1.0, 2.0");
  EXPECT_EQ(file.values, (std::vector<double>{1.0, 2.0}));
}

TEST(SampleIoTest, WhitespaceCommentsAndBlankLines) {
  const auto file = parse_sample_text("# header\n\n1 2\t3   # trailing\r\n4,5\n  \n+6e-1\n");
  EXPECT_EQ(file.values, (std::vector<double>{1, 2, 3, 4, 5, 0.6}));
  EXPECT_EQ(file.row_lengths, (std::vector<std::size_t>{3, 2, 1}));
}

TEST(SampleIoTest, Utf8ByteOrderMark) {
  EXPECT_EQ(parse_sample_text("\xEF\xBB\xBF" "1,2").values.size(), 2u);
}

TEST(SampleIoTest, NegativeValueRejectedWithPosition) {
  try {
    parse_sample_text("1.0\n2.0, -1.0\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 6u);
    EXPECT_NE(std::string(e.what()).find("negative"), std::string::npos);
  }
}

TEST(SampleIoTest, MalformedInputs) {
  for (const char* bad : {"1.0 abc", "1,,2", ",1", "1,", "1.0.0", "nan", "inf", "1e999", "0x10"}) {
    EXPECT_THROW(parse_sample_text(bad), ParseError) << bad;
  }
  EXPECT_THROW(parse_sample_file("/nonexistent/sample.csv"), ParseError);
}

// Curve CSV written with 17 significant digits parses back bit-exactly.
TEST(SerializeTest, CurveCsvRoundTrip) {
  const std::vector<CurvePoint> points = {{2, 0.1, 1.0 / 3.0}, {3, 0.30000000000000004, 2.0 / 7.0}, {4, 1e-300, 12345.678}};
  std::stringstream ss;
  write_curves_csv(ss, {{WeightFunction::gaussian(1.0), points}});
  EXPECT_EQ(ss.str().substr(0, 11), "n,wcre,wce\n");
  EXPECT_EQ(read_curves_csv(ss), points);
}

TEST(SerializeTest, MultiSeriesHeaderAndManifest) {
  const std::vector<CurveSeries> series = {{WeightFunction::gaussian(0.5), {{2, 1, 2}}},
                                           {WeightFunction::gaussian(2), {{2, 3, 4}}}};
  std::stringstream ss;
  write_curves_csv(ss, series);
  std::string header;
  std::getline(ss, header);
  EXPECT_EQ(header, "n,wcre[gaussian:0.5],wce[gaussian:0.5],wcre[gaussian:2],wce[gaussian:2]");
  const auto manifest = curves_manifest(series, false);
  EXPECT_EQ(manifest["series"][0]["label"], "sigma=0.5");
  EXPECT_EQ(manifest["series"][1]["wce_column"], "wce[gaussian:2]");
  EXPECT_THROW(write_curves_csv(ss, {{WeightFunction::gaussian(1), {{2, 1, 1}}}, {WeightFunction::gaussian(2), {}}}),
               ParameterError);
}

TEST(SerializeTest, IdentityReportJsonShape) {
  IdentityReport r;
  r.identity = "kl";
  r.lhs = 1.0;
  r.rhs = 1.0;
  r.pass = true;
  r.notes.emplace_back("divergent_note", std::nullopt);
  const auto j = to_json(r);
  for (const char* key : {"lhs", "rhs", "abs_discrepancy", "tolerance", "pass"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_TRUE(j["notes"]["divergent_note"].is_null());
}

TEST(SerializeTest, ConvergenceCsvLayout) {
  ConvergenceReport r;
  r.wf = "constant:1";
  r.rate = 0.5;
  r.sample_sizes = {2};
  r.replications = 1;
  r.seed = 7;
  r.p = 2;
  r.rows.push_back({2, 0.1, 0.2, 0.0, 2.0, 0.3, 0.4, 0.0, 1.29});
  std::stringstream ss;
  write_convergence_csv(ss, r);
  std::string line, header;
  std::vector<std::string> comments;
  while (std::getline(ss, line) && line.starts_with("#")) comments.push_back(line);
  header = line;
  EXPECT_TRUE(header.starts_with("n,mean_abs_err,max_abs_err,stddev,truth"));
  EXPECT_NE(std::find(comments.begin(), comments.end(), "# seed=7"), comments.end());
  std::getline(ss, line);
  EXPECT_TRUE(line.starts_with("2,0.10000000000000001,0.20000000000000001,0,2,"));
}

}  // namespace
}  // namespace wcentropy
