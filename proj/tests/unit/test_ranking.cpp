#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "unirank/error.hpp"
#include "unirank/ranking.hpp"

using namespace unirank;

namespace {

Ranking from_values(const std::vector<double>& values) {
  std::vector<ScoreEntry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "E%03zu", i);
    entries.push_back({name, values[i]});
  }
  return rank(entries);
}

std::vector<double> descending(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<double>(n - i);
  return v;
}

}  // namespace

TEST(Percentile, FormulaAndEndpoints) {
  EXPECT_DOUBLE_EQ(percentile_of(1, 25), 100.0);
  EXPECT_DOUBLE_EQ(percentile_of(25, 25), 0.0);
  EXPECT_NEAR(percentile_of(2, 25), 95.8333, 1e-4);
  EXPECT_DOUBLE_EQ(percentile_of(16, 25), 37.5);
  EXPECT_THROW(percentile_of(1, 1), ValidationError);
  EXPECT_THROW(percentile_of(5, 4), ValidationError);
}

TEST(Rank, DescendingWithCompetitionTies) {
  const auto r = rank(std::vector<ScoreEntry>{{"b", 2.0}, {"a", 2.0}, {"c", 1.0}, {"d", 3.0}});
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].entity, "d");
  EXPECT_EQ(r[1].entity, "a");  // tied entities ordered by id
  EXPECT_EQ(r[1].rank, 2);
  EXPECT_EQ(r[2].rank, 2);
  EXPECT_EQ(r[3].rank, 4);
  EXPECT_DOUBLE_EQ(r[3].percentile, 0.0);
}

TEST(Rank, RejectsDegenerateInput) {
  EXPECT_THROW(rank(std::vector<ScoreEntry>{{"a", 1.0}}), ValidationError);
  EXPECT_THROW(rank(std::vector<ScoreEntry>{{"a", 1.0}, {"a", 2.0}}), ValidationError);
  EXPECT_THROW(rank(std::vector<ScoreEntry>{{"a", 1.0}, {"b", NAN}}), ValidationError);
  EXPECT_THROW(rank(std::vector<ScoreEntry>{{"a", 1.0}, {"b", INFINITY}}), ValidationError);
}

TEST(Rank, InvariantUnderIncreasingTransform) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  std::vector<double> v(40);
  for (auto& x : v) x = u(rng);
  std::vector<double> t;
  for (double x : v) t.push_back(std::log(x) * 3.0 + 7.0);
  const auto a = from_values(v), b = from_values(t);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].entity, b[i].entity);
    EXPECT_EQ(a[i].rank, b[i].rank);
  }
}

TEST(AverageRanks, TiesShareTheMeanRank) {
  EXPECT_EQ(average_ranks(std::vector<double>{5, 3, 3, 1}), (std::vector<double>{1, 2.5, 2.5, 4}));
}

TEST(Spearman, IdentityReversalAndSymmetry) {
  const auto a = from_values(descending(10));
  auto rev = descending(10);
  std::reverse(rev.begin(), rev.end());
  const auto b = from_values(rev);
  EXPECT_DOUBLE_EQ(spearman(a, a), 1.0);
  EXPECT_NEAR(spearman(a, b), -1.0, 1e-12);

  std::mt19937_64 rng(9);
  std::vector<double> x(30), y(30);
  for (std::size_t i = 0; i < 30; ++i) {
    x[i] = static_cast<double>(rng() % 1000);
    y[i] = x[i] + static_cast<double>(rng() % 400);
  }
  const auto rx = from_values(x), ry = from_values(y);
  EXPECT_DOUBLE_EQ(spearman(rx, ry), spearman(ry, rx));
}

TEST(Spearman, MatchesClosedFormWithoutTies) {
  std::mt19937_64 rng(21);
  std::vector<double> x(25), y(25);
  std::iota(x.begin(), x.end(), 1.0);
  std::iota(y.begin(), y.end(), 1.0);
  std::shuffle(y.begin(), y.end(), rng);
  const auto a = from_values(x), b = from_values(y);
  double d2 = 0.0;
  std::map<std::string, int> rb;
  for (const auto& row : b) rb[row.entity] = row.rank;
  for (const auto& row : a) d2 += std::pow(row.rank - rb[row.entity], 2);
  EXPECT_NEAR(spearman(a, b), 1.0 - 6.0 * d2 / (25.0 * (625.0 - 1.0)), 1e-12);
}

TEST(Spearman, ErrorsOnMismatchOrNoVariance) {
  const auto a = from_values({3, 2, 1});
  const auto c = rank(std::vector<ScoreEntry>{{"x", 1}, {"y", 2}, {"z", 3}});
  EXPECT_THROW(spearman(a, c), ValidationError);
  const auto flat = from_values({1, 1, 1});
  EXPECT_THROW(spearman(a, flat), ValidationError);
}

TEST(Quartiles, FormulaExamples) {
  const int expected[8] = {1, 1, 2, 2, 3, 3, 4, 4};
  for (int r = 1; r <= 8; ++r) EXPECT_EQ(quartile_of(r, 8), expected[r - 1]);
  EXPECT_EQ(quartile_of(13, 50), 2);
  for (std::size_t n = 4; n <= 100; ++n) {
    EXPECT_EQ(quartile_of(1, n), 1);
    EXPECT_EQ(quartile_of(static_cast<int>(n), n), 4);
    for (int r = 1; r < static_cast<int>(n); ++r) EXPECT_LE(quartile_of(r, n), quartile_of(r + 1, n));
  }
  EXPECT_THROW(quartile_of(1, 3), ValidationError);
}

TEST(QuartileMigration, IdenticalAndCraftedSwap) {
  const auto a = from_values(descending(8));
  const auto same = quartile_migration(a, a);
  EXPECT_EQ(same.pct_shifting, 0.0);
  EXPECT_EQ(same.pct_top_to_non_top, 0.0);
  EXPECT_EQ(same.max_shift, 0);

  auto swapped = descending(8);
  std::swap(swapped[1], swapped[2]);  // ranks 2 and 3 trade places across the Q1/Q2 line
  const auto m = quartile_migration(a, from_values(swapped));
  EXPECT_DOUBLE_EQ(m.pct_shifting, 25.0);
  EXPECT_DOUBLE_EQ(m.pct_top_to_non_top, 12.5);
  EXPECT_EQ(m.max_shift, 1);
  EXPECT_DOUBLE_EQ(m.avg_shift, 0.25);
}

TEST(Compare, IdenticalRankingsReportNoShift) {
  const auto a = from_values({0.9, 0.4, 0.7, 0.1, 0.3});
  const auto r = compare(a, a);
  EXPECT_EQ(r.summary.pct_shifting, 0.0);
  EXPECT_EQ(r.summary.avg_shift, 0.0);
  EXPECT_EQ(r.summary.max_shift, 0);
  EXPECT_EQ(r.summary.max_shift_pct, 0.0);
  EXPECT_DOUBLE_EQ(*r.spearman_rho, 1.0);
  for (const auto& row : r.rows) EXPECT_EQ(row.rank_shift, 0);
}

TEST(Compare, ReversalOfFourAndThree) {
  const auto four = compare(from_values({4, 3, 2, 1}), from_values({1, 2, 3, 4}));
  EXPECT_DOUBLE_EQ(four.summary.pct_shifting, 100.0);
  EXPECT_EQ(four.summary.max_shift, 3);
  EXPECT_DOUBLE_EQ(four.summary.max_shift_pct, 100.0);
  EXPECT_NEAR(*four.spearman_rho, -1.0, 1e-12);
  const auto three = compare(from_values({3, 2, 1}), from_values({1, 2, 3}));
  EXPECT_NEAR(three.summary.pct_shifting, 200.0 / 3.0, 1e-12);
}

TEST(Compare, ShiftsNegateUnderSwapAndSumToZero) {
  std::mt19937_64 rng(77);
  std::vector<double> x(20), y(20);
  for (std::size_t i = 0; i < 20; ++i) {
    x[i] = static_cast<double>(i) + 0.5;
    y[i] = static_cast<double>((i * 7) % 20) + 0.25;
  }
  const auto a = from_values(x), b = from_values(y);
  const auto ab = compare(a, b), ba = compare(b, a);
  std::map<std::string, const ComparisonRow*> rows_ba;
  for (const auto& row : ba.rows) rows_ba[row.entity] = &row;
  int total = 0;
  for (const auto& row : ab.rows) {
    EXPECT_EQ(row.rank_shift, -rows_ba[row.entity]->rank_shift);
    EXPECT_DOUBLE_EQ(row.pct_shift, -rows_ba[row.entity]->pct_shift);
    EXPECT_EQ(row.rank_shift, row.rank_a - row.rank_b);
    total += row.rank_shift;
  }
  EXPECT_EQ(total, 0);
}

TEST(Compare, MismatchedPopulationsAreRejected) {
  const auto a = from_values({3, 2, 1});
  const auto b = rank(std::vector<ScoreEntry>{{"E000", 1}, {"E001", 2}, {"other", 3}});
  EXPECT_THROW(compare(a, b), ValidationError);
}

TEST(Compare, MedianAndAverageInBothUnits) {
  // shifts: 0, 2, 2, ... built from a single swap of ranks 1 and 3 among 5
  const auto r = compare(from_values({5, 4, 3, 2, 1}), from_values({3, 4, 5, 2, 1}));
  EXPECT_DOUBLE_EQ(r.summary.pct_shifting, 40.0);
  EXPECT_DOUBLE_EQ(r.summary.avg_shift, 0.8);
  EXPECT_DOUBLE_EQ(r.summary.avg_shift_pct, 20.0);
  EXPECT_DOUBLE_EQ(r.summary.median_shift, 0.0);
  EXPECT_EQ(r.summary.max_shift, 2);
  EXPECT_DOUBLE_EQ(r.summary.max_shift_pct, 50.0);
}

TEST(Compare, RankShiftLabels) {
  EXPECT_EQ(format_rank_shift(2), "↑ 2");
  EXPECT_EQ(format_rank_shift(-7), "↓ 7");
  EXPECT_EQ(format_rank_shift(0), "=");
}

TEST(Compare, DisplayedPercentileShiftUsesRoundedPercentiles) {
  ComparisonRow row;
  row.pct_a = 58.3333333;
  row.pct_b = 54.1666667;
  row.pct_shift = row.pct_b - row.pct_a;
  EXPECT_NEAR(row.displayed_pct_shift(), -4.1, 1e-12);
  EXPECT_NEAR(std::round(row.pct_shift * 10) / 10, -4.2, 1e-12);
}
