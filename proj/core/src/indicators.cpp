#include "unirank/indicators.hpp"

#include <algorithm>
#include <cmath>

#include "unirank/credit.hpp"
#include "unirank/summation.hpp"

namespace unirank {

std::string_view to_string(Indicator indicator) noexcept {
  switch (indicator) {
    case Indicator::fss_p: return "FSS_P";
    case Indicator::fss_up: return "FSS_UP";
    case Indicator::fss_s: return "FSS_S";
    case Indicator::fss_us: return "FSS_US";
    case Indicator::mncs_p: return "MNCS_P";
    case Indicator::mncs_s: return "MNCS_S";
    case Indicator::mncs_up: return "MNCS_UP";
    case Indicator::mncs_us: return "MNCS_US";
  }
  return "?";
}

Indicator parse_indicator(std::string_view text) {
  for (auto i : {Indicator::fss_p, Indicator::fss_up, Indicator::fss_s, Indicator::fss_us, Indicator::mncs_p,
                 Indicator::mncs_s, Indicator::mncs_up, Indicator::mncs_us}) {
    if (to_string(i) == text) return i;
  }
  throw ValidationError("unknown indicator '" + std::string(text) + "'");
}

std::string_view to_string(IndicatorFamily family) noexcept {
  return family == IndicatorFamily::fss ? "fss" : "mncs";
}

IndicatorFamily parse_indicator_family(std::string_view text) {
  if (text == "fss" || text == "FSS") return IndicatorFamily::fss;
  if (text == "mncs" || text == "MNCS") return IndicatorFamily::mncs;
  throw ValidationError("unknown indicator family '" + std::string(text) + "' (expected fss or mncs)");
}

MethodPair method_pair(IndicatorFamily family, Scope scope) {
  if (scope == Scope::professor) throw ValidationError("no method pair at professor scope");
  if (family == IndicatorFamily::fss) {
    return {Indicator::fss_up, scope == Scope::sds ? Indicator::fss_s : Indicator::fss_us};
  }
  return {Indicator::mncs_up, scope == Scope::sds ? Indicator::mncs_s : Indicator::mncs_us};
}

namespace formulas {

std::optional<double> mean_of_positive(std::span<const double> values) {
  CompensatedSum sum;
  std::size_t count = 0;
  for (double v : values) {
    if (v > 0.0) {
      sum += v;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum.value() / static_cast<double>(count);
}

std::optional<double> weighted_mean_of_positive(std::span<const double> scores, std::span<const double> weights) {
  CompensatedSum numerator;
  CompensatedSum denominator;
  bool any = false;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] > 0.0) {
      numerator += scores[i] * weights[i];
      denominator += weights[i];
      any = true;
    }
  }
  if (!any || denominator.value() <= 0.0) return std::nullopt;
  return numerator.value() / denominator.value();
}

double mean_standardized(std::span<const double> scores, std::span<const double> references) {
  if (scores.empty()) return 0.0;
  CompensatedSum sum;
  for (std::size_t i = 0; i < scores.size(); ++i) sum += scores[i] / references[i];
  return sum.value() / static_cast<double>(scores.size());
}

double weighted_standardized(std::span<const double> scores, std::span<const double> references,
                             std::span<const double> weights) {
  const double total = compensated_sum(weights);
  CompensatedSum sum;
  for (std::size_t i = 0; i < scores.size(); ++i) sum += (scores[i] / references[i]) * (weights[i] / total);
  return sum.value();
}

}  // namespace formulas

IndicatorEngine::IndicatorEngine(const Dataset& dataset, const CitationBaselines& baselines,
                                 const DatasetConfig& config)
    : dataset_(&dataset), config_(config) {
  const auto professors = dataset.professors();
  const auto publications = dataset.publications();
  const auto authorships = dataset.authorships();

  impacts_.assign(publications.size(), 0.0);
  credited_.assign(professors.size(), 0.0);
  full_impact_.assign(professors.size(), 0.0);
  publication_counts_.assign(professors.size(), 0);

  std::vector<CompensatedSum> credited(professors.size());
  std::vector<CompensatedSum> full(professors.size());

  for (std::size_t pub = 0; pub < publications.size(); ++pub) {
    const auto byline = dataset.byline(pub);
    bool has_professor = false;
    bool needs_positional = false;
    for (std::size_t idx : byline) {
      const auto& a = authorships[idx];
      if (!a.professor_id) continue;
      has_professor = true;
      const auto& professor = professors[*dataset.find_professor(*a.professor_id)];
      needs_positional |= dataset.field_of(professor).convention == CountingConvention::position_weighted;
    }
    if (!has_professor) continue;

    const double impact = normalized_impact(publications[pub], baselines);
    impacts_[pub] = impact;
    const auto alphabetical = credit_alphabetical(byline.size());
    const auto positional = needs_positional ? publication_credit(dataset, pub, true, config.credit) : CreditVector{};

    for (std::size_t idx : byline) {
      const auto& a = authorships[idx];
      if (!a.professor_id) continue;
      const std::size_t j = *dataset.find_professor(*a.professor_id);
      const bool by_position = dataset.field_of(professors[j]).convention == CountingConvention::position_weighted;
      const double share = by_position ? positional.at_position(a.byline_position)
                                       : alphabetical.at_position(a.byline_position);
      credited[j] += impact * share;
      full[j] += impact;
      ++publication_counts_[j];
    }
  }
  for (std::size_t j = 0; j < professors.size(); ++j) {
    credited_[j] = credited[j].value();
    full_impact_[j] = full[j].value();
  }

  for (std::size_t j = 0; j < professors.size(); ++j) {
    const auto& p = professors[j];
    cells_[EntityKey{p.university_id, p.sds_id}].staff.push_back(j);
  }
  for (auto& [key, cell] : cells_) {
    CompensatedSum salary;
    CompensatedSum credited_sum;
    std::vector<std::size_t> pubs;
    for (std::size_t j : cell.staff) {
      const auto& p = professors[j];
      salary += dataset.salary_of(p) * static_cast<double>(p.years_active);
      credited_sum += credited_[j];
      for (const auto& pa : dataset.authorships_of(j)) pubs.push_back(pa.publication);
    }
    std::sort(pubs.begin(), pubs.end());
    pubs.erase(std::unique(pubs.begin(), pubs.end()), pubs.end());
    CompensatedSum pooled;
    for (std::size_t pub : pubs) pooled += impacts_[pub];
    cell.salary_mass = salary.value();
    cell.credited_impact = credited_sum.value();
    cell.pooled_impact = pooled.value();
    cell.publications = pubs.size();
  }

  build_references();
}

void IndicatorEngine::build_references() {
  struct Collect {
    std::vector<double> fss_p, mncs_p;
    std::vector<double> fss_s, mncs_s, salary, mncs_salary;
  };
  std::map<std::string, Collect, std::less<>> per_sds;
  const auto professors = dataset_->professors();
  for (std::size_t j = 0; j < professors.size(); ++j) {
    auto& c = per_sds[professors[j].sds_id];
    c.fss_p.push_back(fss_professor(j));
    if (auto m = mncs_professor(j)) c.mncs_p.push_back(*m);
  }
  for (const auto& [key, cell] : cells_) {
    auto& c = per_sds[key.field_id];
    c.fss_s.push_back(cell.credited_impact / cell.salary_mass);
    c.salary.push_back(cell.salary_mass);
    if (cell.publications > 0) {
      c.mncs_s.push_back(cell.pooled_impact / static_cast<double>(cell.publications));
      c.mncs_salary.push_back(cell.salary_mass);
    }
  }
  for (const auto& [sds, c] : per_sds) {
    if (auto v = formulas::mean_of_positive(c.fss_p)) references_.fss_p.emplace(sds, *v);
    if (auto v = formulas::mean_of_positive(c.mncs_p)) references_.mncs_p.emplace(sds, *v);
    if (auto v = formulas::weighted_mean_of_positive(c.fss_s, c.salary)) references_.fss_s.emplace(sds, *v);
    if (auto v = formulas::weighted_mean_of_positive(c.mncs_s, c.mncs_salary)) references_.mncs_s.emplace(sds, *v);
  }
}

double IndicatorEngine::fss_professor(std::size_t professor) const {
  const auto& p = dataset_->professors()[professor];
  return credited_.at(professor) / (dataset_->salary_of(p) * static_cast<double>(p.years_active));
}

std::optional<double> IndicatorEngine::mncs_professor(std::size_t professor) const {
  const std::size_t n = publication_counts_.at(professor);
  if (n == 0) return std::nullopt;
  return full_impact_[professor] / static_cast<double>(n);
}

namespace {

double reference_or_throw(const std::map<std::string, double, std::less<>>& refs, std::string_view sds,
                          const char* what) {
  if (auto it = refs.find(sds); it != refs.end()) return it->second;
  throw ComputationError(std::string("undefined national ") + what + " reference for SDS '" + std::string(sds) +
                         "' (no unit with a positive score)");
}

}  // namespace

double IndicatorEngine::national_mean_fss_p(std::string_view sds) const {
  return reference_or_throw(references_.fss_p, sds, "FSS_P");
}
double IndicatorEngine::national_weighted_mean_fss_s(std::string_view sds) const {
  return reference_or_throw(references_.fss_s, sds, "FSS_S");
}
double IndicatorEngine::national_mean_mncs_p(std::string_view sds) const {
  return reference_or_throw(references_.mncs_p, sds, "MNCS_P");
}
double IndicatorEngine::national_weighted_mean_mncs_s(std::string_view sds) const {
  return reference_or_throw(references_.mncs_s, sds, "MNCS_S");
}

const IndicatorEngine::Cell* IndicatorEngine::find_cell(std::string_view university, std::string_view sds) const {
  auto it = cells_.find(EntityKey{std::string(university), std::string(sds)});
  return it == cells_.end() ? nullptr : &it->second;
}

const IndicatorEngine::Cell& IndicatorEngine::cell(std::string_view university, std::string_view sds) const {
  if (const auto* c = find_cell(university, sds)) return *c;
  throw ComputationError("university '" + std::string(university) + "' has no staff in SDS '" + std::string(sds) +
                         "'");
}

std::vector<std::size_t> IndicatorEngine::staff_in(std::string_view university, Scope scope,
                                                   std::string_view field) const {
  std::vector<std::size_t> staff;
  for (auto it = cells_.lower_bound(EntityKey{std::string(university), {}});
       it != cells_.end() && it->first.university_id == university; ++it) {
    const auto& sds = it->first.field_id;
    bool in_scope = false;
    switch (scope) {
      case Scope::professor:
      case Scope::sds: in_scope = sds == field; break;
      case Scope::uda: in_scope = dataset_->field_scheme().find(sds)->second.uda_id == field; break;
      case Scope::overall: in_scope = true; break;
    }
    if (in_scope) staff.insert(staff.end(), it->second.staff.begin(), it->second.staff.end());
  }
  std::sort(staff.begin(), staff.end());
  return staff;
}

std::vector<std::string> IndicatorEngine::sds_in(std::string_view university, Scope scope,
                                                 std::string_view field) const {
  std::vector<std::string> out;
  for (auto it = cells_.lower_bound(EntityKey{std::string(university), {}});
       it != cells_.end() && it->first.university_id == university; ++it) {
    const auto& sds = it->first.field_id;
    if (scope == Scope::overall || (scope == Scope::uda && dataset_->field_scheme().find(sds)->second.uda_id == field) ||
        (scope == Scope::sds && sds == field)) {
      out.push_back(sds);
    }
  }
  return out;
}

void IndicatorEngine::require_threshold(std::string_view university, Scope scope, std::string_view field) const {
  const std::size_t staff = staff_in(university, scope, field).size();
  const auto threshold = static_cast<std::size_t>(staff_threshold(scope, config_));
  if (staff < threshold) {
    throw ComputationError("university '" + std::string(university) + "' has " + std::to_string(staff) +
                           " professors at " + std::string(to_string(scope)) + " '" + std::string(field) +
                           "', below the threshold of " + std::to_string(threshold));
  }
}

double IndicatorEngine::fss_sds(std::string_view university, std::string_view sds) const {
  require_threshold(university, Scope::sds, sds);
  const auto& c = cell(university, sds);
  return c.credited_impact / c.salary_mass;
}

std::optional<double> IndicatorEngine::mncs_sds(std::string_view university, std::string_view sds) const {
  require_threshold(university, Scope::sds, sds);
  const auto& c = cell(university, sds);
  if (c.publications == 0) return std::nullopt;
  return c.pooled_impact / static_cast<double>(c.publications);
}

double IndicatorEngine::fss_university_individual(std::string_view university, Scope scope,
                                                  std::string_view field) const {
  require_threshold(university, scope, field);
  std::vector<double> scores;
  std::vector<double> refs;
  for (std::size_t j : staff_in(university, scope, field)) {
    scores.push_back(fss_professor(j));
    refs.push_back(national_mean_fss_p(dataset_->professors()[j].sds_id));
  }
  return formulas::mean_standardized(scores, refs);
}

double IndicatorEngine::fss_university_field(std::string_view university, Scope scope,
                                             std::string_view field) const {
  if (scope != Scope::uda && scope != Scope::overall) {
    throw ValidationError("FSS_US is defined at uda and overall scope only");
  }
  require_threshold(university, scope, field);
  std::vector<double> scores, refs, weights;
  for (const auto& sds : sds_in(university, scope, field)) {
    const auto& c = cell(university, sds);
    scores.push_back(c.credited_impact / c.salary_mass);
    refs.push_back(national_weighted_mean_fss_s(sds));
    weights.push_back(c.salary_mass);
  }
  return formulas::weighted_standardized(scores, refs, weights);
}

std::optional<double> IndicatorEngine::mncs_university_individual(std::string_view university, Scope scope,
                                                                  std::string_view field) const {
  require_threshold(university, scope, field);
  std::vector<double> scores, refs;
  for (std::size_t j : staff_in(university, scope, field)) {
    auto m = mncs_professor(j);
    if (!m) continue;
    scores.push_back(*m);
    refs.push_back(scope == Scope::sds ? 1.0 : national_mean_mncs_p(dataset_->professors()[j].sds_id));
  }
  if (scores.empty()) return std::nullopt;
  return formulas::mean_standardized(scores, refs);
}

std::optional<double> IndicatorEngine::mncs_university_field(std::string_view university, Scope scope,
                                                             std::string_view field) const {
  if (scope == Scope::sds) return mncs_sds(university, field);
  if (scope != Scope::uda && scope != Scope::overall) {
    throw ValidationError("MNCS_US is defined at uda and overall scope only");
  }
  require_threshold(university, scope, field);
  std::vector<double> scores, refs, weights;
  for (const auto& sds : sds_in(university, scope, field)) {
    const auto& c = cell(university, sds);
    if (c.publications == 0) continue;
    scores.push_back(c.pooled_impact / static_cast<double>(c.publications));
    refs.push_back(national_weighted_mean_mncs_s(sds));
    weights.push_back(c.salary_mass);
  }
  if (scores.empty()) return std::nullopt;
  return formulas::weighted_standardized(scores, refs, weights);
}

std::vector<IndicatorScore> IndicatorEngine::scores(Indicator indicator, Scope scope,
                                                    std::vector<std::string>* skipped) const {
  std::vector<IndicatorScore> out;
  auto invalid = [&] {
    return ValidationError(std::string(to_string(indicator)) + " is not defined at scope '" +
                           std::string(to_string(scope)) + "'");
  };

  if (indicator == Indicator::fss_p || indicator == Indicator::mncs_p) {
    if (scope != Scope::professor) throw invalid();
    const auto professors = dataset_->professors();
    for (std::size_t j = 0; j < professors.size(); ++j) {
      const auto& p = professors[j];
      if (indicator == Indicator::fss_p) {
        out.push_back({indicator, scope, p.university_id, p.sds_id, p.id, fss_professor(j)});
      } else if (auto m = mncs_professor(j)) {
        out.push_back({indicator, scope, p.university_id, p.sds_id, p.id, *m});
      } else if (skipped) {
        skipped->push_back("MNCS_P undefined for professor '" + p.id + "' (no publications)");
      }
    }
    return out;
  }

  if (scope == Scope::professor) throw invalid();
  if ((indicator == Indicator::fss_s || indicator == Indicator::mncs_s) && scope != Scope::sds) throw invalid();
  if ((indicator == Indicator::fss_us || indicator == Indicator::mncs_us) && scope == Scope::sds) throw invalid();

  for (const auto& key : eligible_population(*dataset_, scope, config_)) {
    const auto& u = key.university_id;
    const auto& f = key.field_id;
    std::optional<double> value;
    try {
      switch (indicator) {
        case Indicator::fss_up: value = fss_university_individual(u, scope, f); break;
        case Indicator::fss_s: value = fss_sds(u, f); break;
        case Indicator::fss_us: value = fss_university_field(u, scope, f); break;
        case Indicator::mncs_up: value = mncs_university_individual(u, scope, f); break;
        case Indicator::mncs_s:
        case Indicator::mncs_us: value = mncs_university_field(u, scope, f); break;
        default: throw invalid();
      }
    } catch (const ComputationError& e) {
      throw ComputationError(std::string(to_string(indicator)) + " for university '" + u + "' at " +
                             std::string(to_string(scope)) + (f.empty() ? "" : " '" + f + "'") + ": " + e.what());
    }
    if (!value) {
      if (skipped) {
        skipped->push_back(std::string(to_string(indicator)) + " undefined for university '" + u + "' at " +
                           std::string(to_string(scope)) + (f.empty() ? "" : " '" + f + "'") + " (no publications)");
      }
      continue;
    }
    out.push_back({indicator, scope, u, f, u, *value});
  }
  return out;
}

}  // namespace unirank
