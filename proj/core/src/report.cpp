#include "unirank/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <ostream>
#include <sstream>

#include "unirank/csv.hpp"

namespace unirank {

namespace {

std::string opt(const std::optional<double>& value) {
  return value ? csv::format_double(*value) : std::string();
}

std::string num(double value) { return csv::format_double(value); }

}  // namespace

void write_scores(std::ostream& out, std::span<const IndicatorScore> scores) {
  csv::write_row(out, {"indicator", "scope", "university_id", "field_id", "entity_id", "value"});
  for (const auto& s : scores) {
    csv::write_row(out, {std::string(to_string(s.indicator)), std::string(to_string(s.scope)), s.university_id,
                         s.field_id, s.entity_id, num(s.value)});
  }
}

std::vector<IndicatorScore> read_scores(const std::filesystem::path& path) {
  const auto table = csv::read(path);
  const std::vector<std::string> expected{"indicator", "scope", "university_id", "field_id", "entity_id", "value"};
  if (table.header != expected) {
    throw ValidationError({Issue{path.filename().string(), 1, 0, "unexpected score file header"}});
  }
  std::vector<IndicatorScore> scores;
  std::vector<Issue> issues;
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    if (row.size() != expected.size()) {
      issues.push_back(Issue{path.filename().string(), table.lines[i], 0, "wrong field count"});
      continue;
    }
    try {
      std::size_t used = 0;
      const double value = std::stod(row[5], &used);
      if (used != row[5].size()) throw std::invalid_argument("trailing characters");
      scores.push_back(IndicatorScore{parse_indicator(row[0]), parse_scope(row[1]), row[2], row[3], row[4], value});
    } catch (const std::exception& e) {
      issues.push_back(Issue{path.filename().string(), table.lines[i], 0, e.what()});
    }
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return scores;
}

std::vector<FieldComparison> compare_scores(std::span<const IndicatorScore> scores_a,
                                            std::span<const IndicatorScore> scores_b, Scope scope,
                                            std::vector<std::string>* warnings) {
  using Group = std::map<std::string, double>;
  auto group = [](std::span<const IndicatorScore> scores) {
    std::map<std::string, Group> out;
    for (const auto& s : scores) out[s.field_id][s.entity_id] = s.value;
    return out;
  };
  const auto ga = group(scores_a);
  const auto gb = group(scores_b);
  auto warn = [&](std::string message) {
    if (warnings) warnings->push_back(std::move(message));
  };

  std::set<std::string> fields;
  for (const auto& [f, _] : ga) fields.insert(f);
  for (const auto& [f, _] : gb) fields.insert(f);

  std::vector<FieldComparison> out;
  for (const auto& field : fields) {
    const std::string label = field.empty() ? std::string(to_string(scope)) : field;
    const Group empty;
    const auto& a = ga.contains(field) ? ga.at(field) : empty;
    const auto& b = gb.contains(field) ? gb.at(field) : empty;
    std::vector<ScoreEntry> ea, eb;
    for (const auto& [entity, value] : a) {
      if (auto it = b.find(entity); it != b.end()) {
        ea.push_back({entity, value});
        eb.push_back({entity, it->second});
      } else {
        warn(label + ": entity '" + entity + "' scored by method A only; dropped");
      }
    }
    for (const auto& [entity, _] : b) {
      if (!a.contains(entity)) warn(label + ": entity '" + entity + "' scored by method B only; dropped");
    }
    if (ea.size() < 2) {
      warn(label + ": fewer than 2 ranked entities; comparison skipped");
      continue;
    }
    out.push_back(FieldComparison{scope, field, compare(rank(ea), rank(eb))});
  }
  return out;
}

void write_comparison(std::ostream& out, std::span<const FieldComparison> comparisons) {
  csv::write_row(out, {"field", "entity", "value_A", "rank_A", "pct_A", "value_B", "rank_B", "pct_B", "rank_shift",
                       "pct_shift"});
  for (const auto& c : comparisons) {
    for (const auto& r : c.report.rows) {
      csv::write_row(out, {c.field, r.entity, num(r.value_a), std::to_string(r.rank_a), num(r.pct_a), num(r.value_b),
                           std::to_string(r.rank_b), num(r.pct_b), std::to_string(r.rank_shift), num(r.pct_shift)});
    }
  }
}

void write_summary(std::ostream& out, std::span<const FieldComparison> comparisons) {
  csv::write_row(out, {"scope", "field", "universities", "spearman_rho", "pct_shifting", "avg_shift", "avg_shift_pct",
                       "median_shift", "median_shift_pct", "max_shift", "max_shift_pct", "pct_shifting_quartile",
                       "avg_quartile_shift", "max_quartile_shift", "quartile_rho", "pct_top_to_non_top"});
  for (const auto& c : comparisons) {
    const auto& s = c.report.summary;
    const auto& q = c.report.quartile;
    csv::write_row(out, {std::string(to_string(c.scope)), c.field, std::to_string(s.population),
                         opt(c.report.spearman_rho), num(s.pct_shifting), num(s.avg_shift), num(s.avg_shift_pct),
                         num(s.median_shift), num(s.median_shift_pct), std::to_string(s.max_shift),
                         num(s.max_shift_pct), q ? num(q->pct_shifting) : "", q ? num(q->avg_shift) : "",
                         q ? std::to_string(q->max_shift) : "", q ? opt(q->spearman_rho) : "",
                         q ? num(q->pct_top_to_non_top) : ""});
  }
}

std::vector<UdaRollup> rollup_by_uda(std::span<const FieldComparison> sds_comparisons, const FieldScheme& scheme) {
  std::map<std::string, UdaRollup> by_uda;
  for (const auto& c : sds_comparisons) {
    auto it = scheme.find(c.field);
    if (it == scheme.end()) continue;
    const auto& s = c.report.summary;
    auto [pos, fresh] = by_uda.try_emplace(it->second.uda_id);
    auto& r = pos->second;
    if (fresh) {
      r.uda = it->second.uda_id;
      r.pct_shifting_min = r.pct_shifting_max = s.pct_shifting;
      r.avg_shift_pct_min = r.avg_shift_pct_max = s.avg_shift_pct;
      r.max_shift_pct_min = r.max_shift_pct_max = s.max_shift_pct;
    }
    ++r.fields;
    r.pct_shifting_min = std::min(r.pct_shifting_min, s.pct_shifting);
    r.pct_shifting_max = std::max(r.pct_shifting_max, s.pct_shifting);
    r.avg_shift_pct_min = std::min(r.avg_shift_pct_min, s.avg_shift_pct);
    r.avg_shift_pct_max = std::max(r.avg_shift_pct_max, s.avg_shift_pct);
    r.max_shift_pct_min = std::min(r.max_shift_pct_min, s.max_shift_pct);
    r.max_shift_pct_max = std::max(r.max_shift_pct_max, s.max_shift_pct);
    if (c.report.spearman_rho) {
      const double rho = *c.report.spearman_rho;
      r.rho_min = r.rho_min ? std::min(*r.rho_min, rho) : rho;
      r.rho_max = r.rho_max ? std::max(*r.rho_max, rho) : rho;
    }
  }
  std::vector<UdaRollup> out;
  for (auto& [_, r] : by_uda) out.push_back(std::move(r));
  return out;
}

void write_rollup(std::ostream& out, std::span<const UdaRollup> rollups) {
  csv::write_row(out, {"uda", "sds_count", "pct_shifting_min", "pct_shifting_max", "avg_shift_pct_min",
                       "avg_shift_pct_max", "max_shift_pct_min", "max_shift_pct_max", "rho_min", "rho_max"});
  for (const auto& r : rollups) {
    csv::write_row(out, {r.uda, std::to_string(r.fields), num(r.pct_shifting_min), num(r.pct_shifting_max),
                         num(r.avg_shift_pct_min), num(r.avg_shift_pct_max), num(r.max_shift_pct_min),
                         num(r.max_shift_pct_max), opt(r.rho_min), opt(r.rho_max)});
  }
}

void write_slopegraph(std::ostream& out, std::span<const FieldComparison> comparisons) {
  csv::write_row(out, {"field", "entity", "pct_A", "pct_B"});
  for (const auto& c : comparisons) {
    for (const auto& r : c.report.rows) csv::write_row(out, {c.field, r.entity, num(r.pct_a), num(r.pct_b)});
  }
}

void write_histogram(std::ostream& out, std::span<const FieldComparison> comparisons) {
  csv::write_row(out, {"field", "rank_shift", "frequency"});
  for (const auto& c : comparisons) {
    std::map<int, std::size_t> frequency;
    for (const auto& r : c.report.rows) ++frequency[r.rank_shift];
    for (const auto& [shift, count] : frequency) {
      csv::write_row(out, {c.field, std::to_string(shift), std::to_string(count)});
    }
  }
}

void print_comparison(std::ostream& out, const FieldComparison& comparison, std::string_view label_a,
                      std::string_view label_b) {
  const auto& report = comparison.report;
  out << (comparison.field.empty() ? std::string(to_string(comparison.scope)) : comparison.field) << " ("
      << report.summary.population << " universities)\n";
  std::size_t width = 6;
  for (const auto& r : report.rows) width = std::max(width, r.entity.size());
  out << std::left << std::setw(static_cast<int>(width)) << "ID" << std::right << std::setw(9) << label_a
      << std::setw(6) << "rank" << std::setw(8) << "pct" << std::setw(9) << label_b << std::setw(6) << "rank"
      << std::setw(8) << "pct" << std::setw(8) << "shift" << std::setw(9) << "pct sh." << '\n';
  for (const auto& r : report.rows) {
    std::string pct_shift = r.rank_shift == 0 ? "=" : csv::format_fixed(r.pct_shift, 1);
    if (r.pct_shift > 0 && r.rank_shift != 0) pct_shift = "+" + pct_shift;
    out << std::left << std::setw(static_cast<int>(width)) << r.entity << std::right << std::setw(9)
        << csv::format_fixed(r.value_a, 3) << std::setw(6) << r.rank_a << std::setw(8)
        << csv::format_fixed(r.pct_a, 1) << std::setw(9) << csv::format_fixed(r.value_b, 3) << std::setw(6)
        << r.rank_b << std::setw(8) << csv::format_fixed(r.pct_b, 1)
        // arrows are three UTF-8 bytes wide but one column on screen
        << std::setw(r.rank_shift == 0 ? 8 : 10) << format_rank_shift(r.rank_shift) << std::setw(9) << pct_shift << '\n';
  }
  const auto& s = report.summary;
  out << "spearman rho " << (report.spearman_rho ? csv::format_fixed(*report.spearman_rho, 3) : "n/a")
      << ", shifting " << csv::format_fixed(s.pct_shifting, 1) << "%, average shift "
      << csv::format_fixed(s.avg_shift, 2) << " (" << csv::format_fixed(s.avg_shift_pct, 1) << "), median "
      << csv::format_fixed(s.median_shift, 1) << ", max " << s.max_shift << " ("
      << csv::format_fixed(s.max_shift_pct, 1) << ")\n";
}

}  // namespace unirank
