#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "unirank/indicators.hpp"
#include "unirank/ranking.hpp"

namespace unirank {

/// scores.csv: indicator,scope,university_id,field_id,entity_id,value
void write_scores(std::ostream& out, std::span<const IndicatorScore> scores);
std::vector<IndicatorScore> read_scores(const std::filesystem::path& path);

/// Comparison of the two methods' rankings within one field of a scope
/// (the list for a single scope).
struct FieldComparison {
  Scope scope = Scope::sds;
  std::string field;
  ComparisonReport report;
};

/// Pairs entities of `scores_a` and `scores_b` per field and compares the two
/// rankings. Fields with fewer than two common entities are skipped with a
/// warning; entities present on one side only are dropped with a warning.
std::vector<FieldComparison> compare_scores(std::span<const IndicatorScore> scores_a,
                                            std::span<const IndicatorScore> scores_b,
                                            Scope scope,
                                            std::vector<std::string>* warnings = nullptr);

/// comparison.csv:
/// field,entity,value_A,rank_A,pct_A,value_B,rank_B,pct_B,rank_shift,pct_shift
void write_comparison(std::ostream& out, std::span<const FieldComparison> comparisons);

/// summary.csv, one row per field: the shift, correlation and quartile
/// statistics. Missing statistics are left blank.
void write_summary(std::ostream& out, std::span<const FieldComparison> comparisons);

/// Min-max of the per-SDS statistics within each UDA.
struct UdaRollup {
  std::string uda;
  std::size_t fields = 0;
  double pct_shifting_min = 0.0, pct_shifting_max = 0.0;
  double avg_shift_pct_min = 0.0, avg_shift_pct_max = 0.0;
  double max_shift_pct_min = 0.0, max_shift_pct_max = 0.0;
  std::optional<double> rho_min, rho_max;
};

std::vector<UdaRollup> rollup_by_uda(std::span<const FieldComparison> sds_comparisons,
                                     const FieldScheme& scheme);
void write_rollup(std::ostream& out, std::span<const UdaRollup> rollups);

/// Slopegraph data: field,entity,pct_A,pct_B
void write_slopegraph(std::ostream& out, std::span<const FieldComparison> comparisons);
/// Histogram data: field,rank_shift,frequency (observed shifts only, ascending)
void write_histogram(std::ostream& out, std::span<const FieldComparison> comparisons);

/// Human-readable ranking table with scores to 3 decimals, percentiles to 1
/// decimal and rho to 3 decimals.
void print_comparison(std::ostream& out, const FieldComparison& comparison,
                      std::string_view label_a, std::string_view label_b);

}  // namespace unirank
