#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unirank {

struct ScoreEntry {
  std::string entity;
  double value = 0.0;
};

struct RankingRow {
  std::string entity;
  double value = 0.0;
  int rank = 0;             // 1 = highest value
  double percentile = 0.0;  // 100 (N - rank) / (N - 1)
};

/// Rows ordered by rank, ties by entity id.
using Ranking = std::vector<RankingRow>;

double percentile_of(int rank, std::size_t population);

/// Descending competition ranking ("1224"). Throws ValidationError for fewer
/// than two entities, duplicate entity ids or non-finite values.
Ranking rank(std::span<const ScoreEntry> scores);

/// Fractional (average) ranks of `values`, 1 = largest.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson correlation of average ranks of the two rankings' values, matched
/// by entity. Throws ValidationError on mismatched populations or when either
/// side has no rank variance.
double spearman(const Ranking& a, const Ranking& b);

/// ceil(4 rank / N); N must be at least 4.
int quartile_of(int rank, std::size_t population);
std::map<std::string, int> quartiles(const Ranking& ranking);

struct QuartileStats {
  double pct_shifting = 0.0;     // share of entities changing quartile
  double avg_shift = 0.0;        // mean |quartile change|
  int max_shift = 0;
  double pct_top_to_non_top = 0.0;
  std::optional<double> spearman_rho;  // correlation of quartile classes
};

QuartileStats quartile_migration(const Ranking& a, const Ranking& b);

struct ComparisonRow {
  std::string entity;
  double value_a = 0.0;
  int rank_a = 0;
  double pct_a = 0.0;
  double value_b = 0.0;
  int rank_b = 0;
  double pct_b = 0.0;
  int rank_shift = 0;       // rank_a - rank_b, positive = better under B
  double pct_shift = 0.0;   // pct_b - pct_a, from unrounded percentiles

  /// Difference of the percentiles as printed with one decimal.
  double displayed_pct_shift() const;
};

struct ShiftSummary {
  std::size_t population = 0;
  double pct_shifting = 0.0;
  double avg_shift = 0.0;
  double avg_shift_pct = 0.0;
  double median_shift = 0.0;
  double median_shift_pct = 0.0;
  int max_shift = 0;
  double max_shift_pct = 0.0;
};

struct ComparisonReport {
  std::vector<ComparisonRow> rows;  // in ranking-A order
  ShiftSummary summary;
  std::optional<double> spearman_rho;      // absent when a side has no rank variance
  std::optional<QuartileStats> quartile;   // absent below 4 entities
};

/// Throws ValidationError when the entity sets differ.
ComparisonReport compare(const Ranking& a, const Ranking& b);

/// "↑ 2", "↓ 2", or "=".
std::string format_rank_shift(int shift);

}  // namespace unirank
