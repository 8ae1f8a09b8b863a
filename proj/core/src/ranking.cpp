#include "unirank/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_map>

#include "unirank/error.hpp"
#include "unirank/summation.hpp"

namespace unirank {

double percentile_of(int rank, std::size_t population) {
  if (population < 2) throw ValidationError("percentile needs a population of at least 2");
  if (rank < 1 || static_cast<std::size_t>(rank) > population) throw ValidationError("rank outside population");
  return 100.0 * static_cast<double>(static_cast<long long>(population) - rank) /
         static_cast<double>(population - 1);
}

Ranking rank(std::span<const ScoreEntry> scores) {
  if (scores.size() < 2) throw ValidationError("ranking needs at least 2 entities");
  std::set<std::string_view> seen;
  for (const auto& s : scores) {
    if (!std::isfinite(s.value)) throw ValidationError("non-finite score for entity '" + s.entity + "'");
    if (!seen.insert(s.entity).second) throw ValidationError("duplicate entity '" + s.entity + "' in ranking");
  }

  Ranking rows;
  rows.reserve(scores.size());
  for (const auto& s : scores) rows.push_back(RankingRow{s.entity, s.value, 0, 0.0});
  std::sort(rows.begin(), rows.end(), [](const RankingRow& l, const RankingRow& r) {
    if (l.value != r.value) return l.value > r.value;
    return l.entity < r.entity;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].rank = (i > 0 && rows[i].value == rows[i - 1].value) ? rows[i - 1].rank : static_cast<int>(i) + 1;
    rows[i].percentile = percentile_of(rows[i].rank, rows.size());
  }
  return rows;
}

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return values[l] > values[r]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share the mean of ranks i+1..j+1.
    const double shared = (static_cast<double>(i + 1) + static_cast<double>(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

namespace {

/// Row lookup of `b` by entity, validated against `a`'s population.
std::unordered_map<std::string_view, const RankingRow*> match(const Ranking& a, const Ranking& b) {
  std::unordered_map<std::string_view, const RankingRow*> by_entity;
  for (const auto& row : b) by_entity.emplace(row.entity, &row);
  bool same = a.size() == b.size() && by_entity.size() == b.size();
  for (const auto& row : a) {
    if (!same) break;
    same = by_entity.contains(row.entity);
  }
  if (!same) throw ValidationError("rankings cover different populations");
  return by_entity;
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  const auto n = static_cast<double>(x.size());
  const double mx = compensated_sum(x) / n;
  const double my = compensated_sum(y) / n;
  CompensatedSum sxy, sxx, syy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx.value() <= 0.0 || syy.value() <= 0.0) return std::nullopt;
  return std::clamp(sxy.value() / std::sqrt(sxx.value() * syy.value()), -1.0, 1.0);
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : (values[mid - 1] + values[mid]) / 2.0;
}

double round1(double x) { return std::round(x * 10.0) / 10.0; }

}  // namespace

double spearman(const Ranking& a, const Ranking& b) {
  if (a.size() < 2) throw ValidationError("spearman needs at least 2 entities");
  const auto by_entity = match(a, b);
  std::vector<double> va, vb;
  for (const auto& row : a) {
    va.push_back(row.value);
    vb.push_back(by_entity.at(row.entity)->value);
  }
  auto rho = pearson(average_ranks(va), average_ranks(vb));
  if (!rho) throw ValidationError("spearman undefined: a ranking has no rank variance (all values tied)");
  return *rho;
}

int quartile_of(int rank, std::size_t population) {
  if (population < 4) throw ValidationError("quartiles need a population of at least 4");
  if (rank < 1 || static_cast<std::size_t>(rank) > population) throw ValidationError("rank outside population");
  const auto n = static_cast<long long>(population);
  return static_cast<int>((4LL * rank + n - 1) / n);
}

std::map<std::string, int> quartiles(const Ranking& ranking) {
  std::map<std::string, int> out;
  for (const auto& row : ranking) out.emplace(row.entity, quartile_of(row.rank, ranking.size()));
  return out;
}

QuartileStats quartile_migration(const Ranking& a, const Ranking& b) {
  match(a, b);
  const auto qa = quartiles(a);
  const auto qb = quartiles(b);
  QuartileStats stats;
  std::size_t shifting = 0, top_exits = 0;
  CompensatedSum total_shift;
  std::vector<double> classes_a, classes_b;
  for (const auto& [entity, q] : qa) {
    const int other = qb.at(entity);
    const int shift = std::abs(q - other);
    shifting += shift != 0 ? 1 : 0;
    top_exits += (q == 1 && other != 1) ? 1 : 0;
    total_shift += shift;
    stats.max_shift = std::max(stats.max_shift, shift);
    classes_a.push_back(-q);
    classes_b.push_back(-other);
  }
  const auto n = static_cast<double>(qa.size());
  stats.pct_shifting = 100.0 * static_cast<double>(shifting) / n;
  stats.avg_shift = total_shift.value() / n;
  stats.pct_top_to_non_top = 100.0 * static_cast<double>(top_exits) / n;
  stats.spearman_rho = pearson(average_ranks(classes_a), average_ranks(classes_b));
  return stats;
}

double ComparisonRow::displayed_pct_shift() const { return round1(round1(pct_b) - round1(pct_a)); }

ComparisonReport compare(const Ranking& a, const Ranking& b) {
  const auto by_entity = match(a, b);
  ComparisonReport report;
  report.rows.reserve(a.size());
  for (const auto& ra : a) {
    const auto& rb = *by_entity.at(ra.entity);
    report.rows.push_back(ComparisonRow{ra.entity, ra.value, ra.rank, ra.percentile, rb.value, rb.rank,
                                        rb.percentile, ra.rank - rb.rank, rb.percentile - ra.percentile});
  }

  auto& s = report.summary;
  s.population = report.rows.size();
  std::vector<double> shifts, pct_shifts;
  std::size_t shifting = 0;
  for (const auto& row : report.rows) {
    shifts.push_back(std::abs(row.rank_shift));
    pct_shifts.push_back(std::fabs(row.pct_shift));
    shifting += row.rank_shift != 0 ? 1 : 0;
    s.max_shift = std::max(s.max_shift, std::abs(row.rank_shift));
    s.max_shift_pct = std::max(s.max_shift_pct, std::fabs(row.pct_shift));
  }
  const auto n = static_cast<double>(s.population);
  if (s.population > 0) {
    s.pct_shifting = 100.0 * static_cast<double>(shifting) / n;
    s.avg_shift = compensated_sum(shifts) / n;
    s.avg_shift_pct = compensated_sum(pct_shifts) / n;
  }
  s.median_shift = median(shifts);
  s.median_shift_pct = median(pct_shifts);

  if (s.population >= 2) {
    try {
      report.spearman_rho = spearman(a, b);
    } catch (const ValidationError&) {
      report.spearman_rho.reset();
    }
  }
  if (s.population >= 4) report.quartile = quartile_migration(a, b);
  return report;
}

std::string format_rank_shift(int shift) {
  if (shift > 0) return "\xE2\x86\x91 " + std::to_string(shift);
  if (shift < 0) return "\xE2\x86\x93 " + std::to_string(-shift);
  return "=";
}

}  // namespace unirank
