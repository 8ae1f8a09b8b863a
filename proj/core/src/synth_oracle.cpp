#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "unirank/synth.hpp"

// Ground-truth scorer. Deliberately shares nothing with the engine beyond the
// record types: filtering, credit shares and aggregation are spelled out case
// by case, with plain loops over the raw tables.

namespace unirank {

namespace {

std::string lower(std::string text) {
  for (char& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return text;
}

double positional_share(int n, int pos, bool intramural, const CreditWeights& w) {
  if (n == 1) return 1.0;
  if (n == 2) return 0.5;
  const bool end = pos == 1 || pos == n;
  if (intramural) return end ? w.intramural_end : (1.0 - 2.0 * w.intramural_end) / (n - 2);
  if (n == 3) {
    const double total = 2.0 * w.extramural_end + 2.0 * w.extramural_inner;
    return end ? w.extramural_end / total : 2.0 * w.extramural_inner / total;
  }
  if (n == 4) {
    const double total = 2.0 * w.extramural_end + 2.0 * w.extramural_inner;
    return end ? w.extramural_end / total : w.extramural_inner / total;
  }
  if (end) return w.extramural_end;
  if (pos == 2 || pos == n - 1) return w.extramural_inner;
  return (1.0 - 2.0 * w.extramural_end - 2.0 * w.extramural_inner) / (n - 4);
}

struct Row {
  int position;
  std::optional<std::string> professor;
  std::optional<std::string> affiliation;
};

}  // namespace

std::vector<IndicatorScore> brute_force_scores(const DatasetTables& tables, const DatasetConfig& config) {
  if (!tables.baselines) throw ValidationError("brute-force scoring needs citation baselines");
  const auto& baselines = *tables.baselines;

  std::map<std::string, const Professor*> all_professors, kept;
  for (const auto& p : tables.professors) {
    all_professors[p.id] = &p;
    if (p.years_active >= config.min_tenure_years) kept[p.id] = &p;
  }
  std::set<std::string> excluded;
  for (const auto& d : config.excluded_doc_types) excluded.insert(lower(d));

  std::map<std::string, std::vector<Row>> rows;
  for (const auto& a : tables.authorships) {
    std::optional<std::string> affiliation = a.author_university_id;
    if (!affiliation && a.professor_id) affiliation = all_professors.at(*a.professor_id)->university_id;
    rows[a.publication_id].push_back(Row{a.byline_position, a.professor_id, affiliation});
  }

  auto salary = [&](const Professor& p) { return tables.salaries.at(p.rank) * p.years_active; };
  auto uda_of = [&](const std::string& sds) { return tables.field_scheme.at(sds).uda_id; };
  auto positional = [&](const std::string& sds) {
    return tables.field_scheme.at(sds).convention == CountingConvention::position_weighted;
  };

  // prof id -> (credited impact, full impact, publication count)
  struct Tally {
    double credited = 0.0, full = 0.0;
    int count = 0;
  };
  std::map<std::string, Tally> tally;
  // (university, sds) -> publication impacts, each publication once
  std::map<std::pair<std::string, std::string>, std::map<std::string, double>> cell_pubs;

  for (const auto& pub : tables.publications) {
    if (excluded.count(lower(pub.doc_type))) continue;
    if (pub.year < config.window_start || pub.year > config.window_end) continue;
    auto it = rows.find(pub.id);
    if (it == rows.end()) continue;
    auto byline = it->second;
    std::sort(byline.begin(), byline.end(), [](const Row& a, const Row& b) { return a.position < b.position; });
    const int n = static_cast<int>(byline.size());

    bool any = false;
    for (const auto& r : byline) any |= r.professor && kept.count(*r.professor);
    if (!any) continue;

    double impact = 0.0;
    if (pub.citations > 0) {
      double sum = 0.0;
      for (const auto& cat : pub.subject_categories) {
        auto value = baselines.lookup(pub.year, cat);
        if (!value) throw ComputationError("missing baseline for " + cat);
        sum += *value;
      }
      impact = static_cast<double>(pub.citations) / (sum / static_cast<double>(pub.subject_categories.size()));
    }

    const auto& first = byline.front().affiliation;
    const auto& last = byline.back().affiliation;
    const bool intramural = n == 1 || (first && last && !first->empty() && *first == *last);

    for (const auto& r : byline) {
      if (!r.professor || !kept.count(*r.professor)) continue;
      const Professor& p = *kept.at(*r.professor);
      const double share =
          positional(p.sds_id) ? positional_share(n, r.position, intramural, config.credit) : 1.0 / n;
      auto& t = tally[p.id];
      t.credited += impact * share;
      t.full += impact;
      ++t.count;
      cell_pubs[{p.university_id, p.sds_id}][pub.id] = impact;
    }
  }

  auto fss_p = [&](const Professor& p) { return tally[p.id].credited / salary(p); };
  auto mncs_p = [&](const Professor& p) -> std::optional<double> {
    const auto& t = tally[p.id];
    if (t.count == 0) return std::nullopt;
    return t.full / t.count;
  };

  struct CellSum {
    double salary = 0.0, credited = 0.0;
    int staff = 0;
  };
  std::map<std::pair<std::string, std::string>, CellSum> cells;
  for (const auto& [id, p] : kept) {
    auto& c = cells[{p->university_id, p->sds_id}];
    c.salary += salary(*p);
    c.credited += tally[id].credited;
    ++c.staff;
  }
  auto cell_fss = [&](const std::pair<std::string, std::string>& key) {
    return cells.at(key).credited / cells.at(key).salary;
  };
  auto cell_mncs = [&](const std::pair<std::string, std::string>& key) -> std::optional<double> {
    auto it = cell_pubs.find(key);
    if (it == cell_pubs.end() || it->second.empty()) return std::nullopt;
    double sum = 0.0;
    for (const auto& [id, impact] : it->second) sum += impact;
    return sum / static_cast<double>(it->second.size());
  };

  std::map<std::string, double> ref_fss_p, ref_mncs_p, ref_fss_s, ref_mncs_s;
  {
    std::map<std::string, std::pair<double, int>> fp, mp;
    for (const auto& [id, p] : kept) {
      if (double v = fss_p(*p); v > 0.0) {
        fp[p->sds_id].first += v;
        ++fp[p->sds_id].second;
      }
      if (auto m = mncs_p(*p); m && *m > 0.0) {
        mp[p->sds_id].first += *m;
        ++mp[p->sds_id].second;
      }
    }
    for (const auto& [sds, s] : fp) ref_fss_p[sds] = s.first / s.second;
    for (const auto& [sds, s] : mp) ref_mncs_p[sds] = s.first / s.second;
    std::map<std::string, std::pair<double, double>> fs, ms;
    for (const auto& [key, c] : cells) {
      if (double v = cell_fss(key); v > 0.0) {
        fs[key.second].first += v * c.salary;
        fs[key.second].second += c.salary;
      }
      if (auto m = cell_mncs(key); m && *m > 0.0) {
        ms[key.second].first += *m * c.salary;
        ms[key.second].second += c.salary;
      }
    }
    for (const auto& [sds, s] : fs) ref_fss_s[sds] = s.first / s.second;
    for (const auto& [sds, s] : ms) ref_mncs_s[sds] = s.first / s.second;
  }
  auto ref = [](const std::map<std::string, double>& refs, const std::string& sds) {
    auto it = refs.find(sds);
    if (it == refs.end()) throw ComputationError("no national reference for " + sds);
    return it->second;
  };

  std::vector<IndicatorScore> out;
  for (const auto& [id, p] : kept) {
    out.push_back({Indicator::fss_p, Scope::professor, p->university_id, p->sds_id, id, fss_p(*p)});
    if (auto m = mncs_p(*p)) out.push_back({Indicator::mncs_p, Scope::professor, p->university_id, p->sds_id, id, *m});
  }

  for (Scope scope : {Scope::sds, Scope::uda, Scope::overall}) {
    const int threshold = scope == Scope::sds   ? config.min_staff_sds
                          : scope == Scope::uda ? config.min_staff_uda
                                                : config.min_staff_overall;
    auto field_of = [&](const Professor& p) {
      return scope == Scope::sds ? p.sds_id : scope == Scope::uda ? uda_of(p.sds_id) : std::string();
    };
    std::map<std::pair<std::string, std::string>, std::vector<const Professor*>> units;
    for (const auto& [id, p] : kept) units[{p->university_id, field_of(*p)}].push_back(p);

    for (const auto& [key, staff] : units) {
      if (static_cast<int>(staff.size()) < threshold) continue;
      const auto& [u, f] = key;

      double fss_up = 0.0;
      for (const auto* p : staff) fss_up += fss_p(*p) / ref(ref_fss_p, p->sds_id);
      out.push_back({Indicator::fss_up, scope, u, f, u, fss_up / static_cast<double>(staff.size())});

      double mncs_up = 0.0;
      int defined = 0;
      for (const auto* p : staff) {
        auto m = mncs_p(*p);
        if (!m) continue;
        mncs_up += scope == Scope::sds ? *m : *m / ref(ref_mncs_p, p->sds_id);
        ++defined;
      }
      if (defined > 0) out.push_back({Indicator::mncs_up, scope, u, f, u, mncs_up / defined});

      if (scope == Scope::sds) {
        out.push_back({Indicator::fss_s, scope, u, f, u, cell_fss({u, f})});
        if (auto m = cell_mncs({u, f})) out.push_back({Indicator::mncs_s, scope, u, f, u, *m});
        continue;
      }

      std::set<std::string> sds_set;
      for (const auto* p : staff) sds_set.insert(p->sds_id);
      double total_salary = 0.0, fss_us = 0.0;
      for (const auto& s : sds_set) total_salary += cells.at({u, s}).salary;
      for (const auto& s : sds_set) {
        fss_us += cell_fss({u, s}) / ref(ref_fss_s, s) * cells.at({u, s}).salary / total_salary;
      }
      out.push_back({Indicator::fss_us, scope, u, f, u, fss_us});

      double mncs_salary = 0.0, mncs_us = 0.0;
      for (const auto& s : sds_set) {
        if (cell_mncs({u, s})) mncs_salary += cells.at({u, s}).salary;
      }
      for (const auto& s : sds_set) {
        if (auto m = cell_mncs({u, s})) mncs_us += *m / ref(ref_mncs_s, s) * cells.at({u, s}).salary / mncs_salary;
      }
      if (mncs_salary > 0.0) out.push_back({Indicator::mncs_us, scope, u, f, u, mncs_us});
    }
  }
  return out;
}

}  // namespace unirank
