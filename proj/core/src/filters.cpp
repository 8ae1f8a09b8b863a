#include "unirank/filters.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace unirank {

namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

}  // namespace

FilteredDataset apply_filters(const Dataset& dataset, const DatasetConfig& config) {
  const auto& in = dataset.tables();
  FilteredDataset result{dataset, {}};
  DatasetTables out;
  out.salaries = in.salaries;
  out.field_scheme = in.field_scheme;
  out.baselines = in.baselines;

  std::set<std::string, std::less<>> dropped_professors;
  for (const auto& p : in.professors) {
    if (p.years_active < config.min_tenure_years) {
      dropped_professors.insert(p.id);
      ++result.removed.professors_short_tenure;
    } else {
      out.professors.push_back(p);
    }
  }

  std::set<std::string, std::less<>> excluded_types;
  for (const auto& t : config.excluded_doc_types) excluded_types.insert(lowercase(t));

  std::set<std::string, std::less<>> dropped_publications;
  for (const auto& pub : in.publications) {
    if (excluded_types.contains(lowercase(pub.doc_type))) {
      dropped_publications.insert(pub.id);
      ++result.removed.publications_excluded_doc_type;
    } else if (pub.year < config.window_start || pub.year > config.window_end) {
      dropped_publications.insert(pub.id);
      ++result.removed.publications_outside_window;
    } else {
      out.publications.push_back(pub);
    }
  }

  for (const auto& a : in.authorships) {
    if (dropped_publications.contains(a.publication_id)) {
      ++result.removed.authorships_removed;
      continue;
    }
    Authorship kept = a;
    if (a.professor_id && dropped_professors.contains(*a.professor_id)) {
      if (auto affiliation = dataset.affiliation(a)) kept.author_university_id = std::string(*affiliation);
      kept.professor_id.reset();
      ++result.removed.authorships_detached;
    }
    out.authorships.push_back(std::move(kept));
  }

  result.dataset = Dataset(std::move(out), config);
  return result;
}

std::string field_at_scope(const Dataset& dataset, const Professor& professor, Scope scope) {
  switch (scope) {
    case Scope::professor:
    case Scope::sds: return professor.sds_id;
    case Scope::uda: return dataset.field_of(professor).uda_id;
    case Scope::overall: return {};
  }
  return {};
}

std::map<EntityKey, std::size_t> staff_counts(const Dataset& dataset, Scope scope) {
  std::map<EntityKey, std::size_t> counts;
  for (const auto& p : dataset.professors()) {
    ++counts[EntityKey{p.university_id, field_at_scope(dataset, p, scope)}];
  }
  return counts;
}

int staff_threshold(Scope scope, const DatasetConfig& config) {
  switch (scope) {
    case Scope::sds: return config.min_staff_sds;
    case Scope::uda: return config.min_staff_uda;
    case Scope::overall: return config.min_staff_overall;
    case Scope::professor: break;
  }
  throw ValidationError("no eligible population at scope '" + std::string(to_string(scope)) + "'");
}

std::vector<EntityKey> eligible_population(const Dataset& dataset, Scope scope, const DatasetConfig& config) {
  const auto threshold = static_cast<std::size_t>(staff_threshold(scope, config));
  std::vector<EntityKey> eligible;
  for (auto& [key, count] : staff_counts(dataset, scope)) {
    if (count >= threshold) eligible.push_back(key);
  }
  return eligible;
}

}  // namespace unirank
