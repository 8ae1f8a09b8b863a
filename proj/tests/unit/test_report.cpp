#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "builders.hpp"
#include "golden.hpp"
#include "unirank/csv.hpp"
#include "unirank/report.hpp"

using namespace unirank;
using namespace unirank::testing;

namespace {

std::vector<IndicatorScore> scores(Indicator ind, Scope scope, const std::string& field,
                                   const std::vector<std::pair<std::string, double>>& values) {
  std::vector<IndicatorScore> out;
  for (const auto& [u, v] : values) out.push_back({ind, scope, u, field, u, v});
  return out;
}

}  // namespace

TEST(Scores, WriteReadRoundTripIsExact) {
  const auto s = scores(Indicator::fss_up, Scope::uda, "UDA_1", {{"U1", 0.1 + 0.2}, {"U2", 1.0 / 3.0}, {"U,3", 7e-300}});
  const auto dir = scratch_dir("scores");
  {
    std::ofstream out(dir / "s.csv");
    write_scores(out, s);
  }
  EXPECT_EQ(read_scores(dir / "s.csv"), s);
}

TEST(Scores, BadHeaderOrValueIsAValidationError) {
  const auto dir = scratch_dir("badscores");
  std::ofstream(dir / "h.csv") << "a,b\n";
  EXPECT_THROW(read_scores(dir / "h.csv"), ValidationError);
  std::ofstream(dir / "v.csv") << "indicator,scope,university_id,field_id,entity_id,value\nFSS_UP,sds,U,F,U,abc\n";
  EXPECT_THROW(read_scores(dir / "v.csv"), ValidationError);
}

TEST(CompareScores, PairsPerFieldAndWarnsOnOneSidedEntities) {
  auto a = scores(Indicator::fss_up, Scope::sds, "S1", {{"U1", 3}, {"U2", 2}, {"U3", 1}});
  auto b = scores(Indicator::fss_s, Scope::sds, "S1", {{"U1", 1}, {"U2", 2}, {"U4", 1}});
  const auto more_a = scores(Indicator::fss_up, Scope::sds, "S2", {{"U1", 1}});
  const auto more_b = scores(Indicator::fss_s, Scope::sds, "S2", {{"U1", 1}});
  a.insert(a.end(), more_a.begin(), more_a.end());
  b.insert(b.end(), more_b.begin(), more_b.end());
  std::vector<std::string> warnings;
  const auto cmp = compare_scores(a, b, Scope::sds, &warnings);
  ASSERT_EQ(cmp.size(), 1u);
  EXPECT_EQ(cmp[0].field, "S1");
  EXPECT_EQ(cmp[0].report.rows.size(), 2u);
  EXPECT_EQ(warnings.size(), 3u);
}

TEST(CompareScores, IdenticalMethodsGiveAllZeroShiftReport) {
  const auto a = scores(Indicator::fss_up, Scope::overall, "", {{"U1", 3}, {"U2", 2}, {"U3", 1}, {"U4", 0.5}});
  const auto cmp = compare_scores(a, a, Scope::overall);
  ASSERT_EQ(cmp.size(), 1u);
  std::ostringstream out;
  write_summary(out, cmp);
  const auto table = csv::parse(out.str());
  ASSERT_EQ(table.rows.size(), 1u);
  const auto& row = table.rows[0];
  EXPECT_EQ(row[table.column("spearman_rho")], "1");
  for (const char* c : {"pct_shifting", "avg_shift", "median_shift", "max_shift", "max_shift_pct",
                        "pct_shifting_quartile", "pct_top_to_non_top"}) {
    EXPECT_EQ(row[table.column(c)], "0") << c;
  }
}

TEST(Reports, FileShapesFollowTheSchema) {
  const auto rows = load_golden("fis04_sds_ranking.csv");
  const std::vector<FieldComparison> cmp{{Scope::sds, "FIS/04", compare_golden(rows)}};

  std::ostringstream comparison, slope, histogram, summary;
  write_comparison(comparison, cmp);
  write_slopegraph(slope, cmp);
  write_histogram(histogram, cmp);
  write_summary(summary, cmp);

  const auto c = csv::parse(comparison.str());
  EXPECT_EQ(c.header, (std::vector<std::string>{"field", "entity", "value_A", "rank_A", "pct_A", "value_B", "rank_B",
                                                "pct_B", "rank_shift", "pct_shift"}));
  EXPECT_EQ(c.rows.size(), 25u);
  EXPECT_EQ(csv::parse(slope.str()).header, (std::vector<std::string>{"field", "entity", "pct_A", "pct_B"}));

  const auto h = csv::parse(histogram.str());
  int total = 0, zero = 0;
  for (const auto& r : h.rows) {
    total += std::stoi(r[2]);
    if (r[1] == "0") zero = std::stoi(r[2]);
  }
  EXPECT_EQ(total, 25);
  EXPECT_EQ(zero, 6);  // 76% of 25 shift

  const auto s = csv::parse(summary.str());
  EXPECT_EQ(s.rows.at(0)[s.column("universities")], "25");
}

TEST(Reports, RollupTakesMinAndMaxPerUda) {
  FieldScheme scheme{{"S1", {"UDA_X", CountingConvention::alphabetical}},
                     {"S2", {"UDA_X", CountingConvention::alphabetical}},
                     {"S3", {"UDA_Y", CountingConvention::alphabetical}}};
  auto a = scores(Indicator::fss_up, Scope::sds, "S1", {{"U1", 3}, {"U2", 2}, {"U3", 1}});
  auto b = scores(Indicator::fss_s, Scope::sds, "S1", {{"U1", 1}, {"U2", 2}, {"U3", 3}});
  for (const char* f : {"S2", "S3"}) {
    const auto extra = scores(Indicator::fss_up, Scope::sds, f, {{"U1", 3}, {"U2", 2}, {"U3", 1}});
    a.insert(a.end(), extra.begin(), extra.end());
    b.insert(b.end(), extra.begin(), extra.end());
  }
  const auto rollups = rollup_by_uda(compare_scores(a, b, Scope::sds), scheme);
  ASSERT_EQ(rollups.size(), 2u);
  EXPECT_EQ(rollups[0].uda, "UDA_X");
  EXPECT_EQ(rollups[0].fields, 2u);
  EXPECT_DOUBLE_EQ(rollups[0].pct_shifting_min, 0.0);
  EXPECT_NEAR(rollups[0].pct_shifting_max, 200.0 / 3.0, 1e-12);
  EXPECT_NEAR(*rollups[0].rho_min, -1.0, 1e-12);
  EXPECT_DOUBLE_EQ(*rollups[0].rho_max, 1.0);
  EXPECT_DOUBLE_EQ(rollups[0].max_shift_pct_max, 100.0);
}

TEST(Reports, PrintedTableUsesDisplayPrecision) {
  const auto rows = load_golden("fis04_sds_ranking.csv");
  std::ostringstream out;
  print_comparison(out, FieldComparison{Scope::sds, "FIS/04", compare_golden(rows)}, "FSS_p", "FSS_s");
  const auto text = out.str();
  EXPECT_NE(text.find("spearman rho 0.960"), std::string::npos);
  EXPECT_NE(text.find("0.664"), std::string::npos);
  EXPECT_NE(text.find("95.8"), std::string::npos);
  EXPECT_NE(text.find("↑ 5"), std::string::npos);
  EXPECT_NE(text.find("shifting 76.0%"), std::string::npos);
}
