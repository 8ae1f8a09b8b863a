#include "unirank/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "unirank/dataset_io.hpp"

namespace unirank {

std::string Issue::to_string() const {
  std::ostringstream out;
  out << (file.empty() ? "<dataset>" : file);
  if (line != 0) out << ':' << line;
  if (column != 0) out << ':' << column;
  out << ": " << message;
  return out.str();
}

namespace {

std::string join_issues(const std::vector<Issue>& issues) {
  std::ostringstream out;
  out << issues.size() << (issues.size() == 1 ? " validation error" : " validation errors");
  for (std::size_t i = 0; i < issues.size() && i < 5; ++i) out << "\n  " << issues[i].to_string();
  if (issues.size() > 5) out << "\n  ...";
  return out.str();
}

}  // namespace

ValidationError::ValidationError(std::vector<Issue> issues)
    : Error(join_issues(issues)), issues_(std::move(issues)) {}

ValidationError::ValidationError(const std::string& message)
    : Error(message), issues_{Issue{{}, 0, 0, message}} {}

std::string_view to_string(CountingConvention convention) noexcept {
  return convention == CountingConvention::alphabetical ? "alphabetical" : "position-weighted";
}

std::optional<CountingConvention> parse_counting_convention(std::string_view text) noexcept {
  if (text == "alphabetical") return CountingConvention::alphabetical;
  if (text == "position-weighted" || text == "position_weighted") {
    return CountingConvention::position_weighted;
  }
  return std::nullopt;
}

std::string_view to_string(Scope scope) noexcept {
  switch (scope) {
    case Scope::professor: return "professor";
    case Scope::sds: return "sds";
    case Scope::uda: return "uda";
    case Scope::overall: return "overall";
  }
  return "?";
}

Scope parse_scope(std::string_view text) {
  if (text == "professor") return Scope::professor;
  if (text == "sds") return Scope::sds;
  if (text == "uda") return Scope::uda;
  if (text == "overall") return Scope::overall;
  throw ValidationError("unknown scope '" + std::string(text) + "'");
}

void DatasetConfig::validate() const {
  std::vector<Issue> issues;
  auto fail = [&](std::string message) { issues.push_back(Issue{"config", 0, 0, std::move(message)}); };
  if (window_end < window_start) fail("window_end precedes window_start");
  if (min_tenure_years < 1) fail("min_tenure_years must be >= 1");
  if (min_staff_sds < 1) fail("min_staff_sds must be >= 1");
  if (min_staff_uda < 1) fail("min_staff_uda must be >= 1");
  if (min_staff_overall < 1) fail("min_staff_overall must be >= 1");
  try {
    credit.validate();
  } catch (const ValidationError& e) {
    for (const auto& issue : e.issues()) issues.push_back(issue);
  }
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::vector<Issue> Dataset::check(const DatasetTables& tables, const DatasetConfig& config) {
  std::vector<Issue> issues;
  auto add = [&](const char* file, std::size_t row, std::size_t column, std::string message) {
    // Rows are 0-based after the header line.
    issues.push_back(Issue{file, row + 2, column, std::move(message)});
  };

  for (const auto& [rank, salary] : tables.salaries) {
    if (!std::isfinite(salary) || salary <= 0.0) {
      issues.push_back(Issue{kSalariesFile, 0, 2, "salary of rank '" + rank + "' must be > 0"});
    }
  }
  for (const auto& [sds, field] : tables.field_scheme) {
    if (field.uda_id.empty()) {
      issues.push_back(Issue{kFieldSchemeFile, 0, 2, "SDS '" + sds + "' has no UDA"});
    }
  }

  std::set<std::string, std::less<>> professor_ids;
  for (std::size_t i = 0; i < tables.professors.size(); ++i) {
    const auto& p = tables.professors[i];
    if (p.id.empty()) add(kProfessorsFile, i, 1, "empty professor id");
    if (!professor_ids.insert(p.id).second) add(kProfessorsFile, i, 1, "duplicate professor id '" + p.id + "'");
    if (p.university_id.empty()) add(kProfessorsFile, i, 2, "empty university_id");
    if (!tables.field_scheme.contains(p.sds_id)) {
      add(kProfessorsFile, i, 3, "dangling reference: SDS '" + p.sds_id + "' not in field scheme");
    }
    if (!tables.salaries.contains(p.rank)) {
      add(kProfessorsFile, i, 4, "dangling reference: rank '" + p.rank + "' has no salary");
    }
    if (p.years_active < 1 || p.years_active > config.window_length()) {
      add(kProfessorsFile, i, 5,
          "professor '" + p.id + "': years_active " + std::to_string(p.years_active) + " outside 1.." +
              std::to_string(config.window_length()));
    }
  }

  std::set<std::string, std::less<>> publication_ids;
  for (std::size_t i = 0; i < tables.publications.size(); ++i) {
    const auto& pub = tables.publications[i];
    if (pub.id.empty()) add(kPublicationsFile, i, 1, "empty publication id");
    if (!publication_ids.insert(pub.id).second) {
      add(kPublicationsFile, i, 1, "duplicate publication id '" + pub.id + "'");
    }
    if (pub.year > config.window_end) {
      add(kPublicationsFile, i, 2, "publication '" + pub.id + "': year " + std::to_string(pub.year) + " after window end");
    }
    if (pub.citations < 0) add(kPublicationsFile, i, 3, "publication '" + pub.id + "': negative citations");
    if (pub.subject_categories.empty()) add(kPublicationsFile, i, 5, "publication '" + pub.id + "': no subject categories");
  }

  struct BylineCheck {
    std::vector<int> positions;
    std::set<int> totals;
    std::set<std::string, std::less<>> professors;
  };
  std::map<std::string, BylineCheck, std::less<>> bylines;
  for (std::size_t i = 0; i < tables.authorships.size(); ++i) {
    const auto& a = tables.authorships[i];
    if (!publication_ids.contains(a.publication_id)) {
      add(kAuthorshipsFile, i, 1, "dangling reference: publication '" + a.publication_id + "'");
      continue;
    }
    if (a.total_authors < 1) add(kAuthorshipsFile, i, 3, "total_authors must be >= 1");
    if (a.byline_position < 1 || a.byline_position > a.total_authors) {
      add(kAuthorshipsFile, i, 2, "byline_position outside 1..total_authors");
    }
    auto& check = bylines[a.publication_id];
    check.positions.push_back(a.byline_position);
    check.totals.insert(a.total_authors);
    if (a.professor_id) {
      if (!professor_ids.contains(*a.professor_id)) {
        add(kAuthorshipsFile, i, 4, "dangling reference: professor '" + *a.professor_id + "'");
      } else if (!check.professors.insert(*a.professor_id).second) {
        add(kAuthorshipsFile, i, 4,
            "professor '" + *a.professor_id + "' appears twice in publication '" + a.publication_id + "'");
      }
    }
  }
  for (auto& [publication, check] : bylines) {
    std::sort(check.positions.begin(), check.positions.end());
    if (std::adjacent_find(check.positions.begin(), check.positions.end()) != check.positions.end()) {
      issues.push_back(Issue{kAuthorshipsFile, 0, 2, "duplicate byline position in publication '" + publication + "'"});
    }
    if (check.totals.size() != 1) {
      issues.push_back(Issue{kAuthorshipsFile, 0, 3, "inconsistent total_authors in publication '" + publication + "'"});
    } else if (static_cast<std::size_t>(*check.totals.begin()) != check.positions.size()) {
      issues.push_back(Issue{kAuthorshipsFile, 0, 3,
                             "publication '" + publication + "' declares " + std::to_string(*check.totals.begin()) +
                                 " authors but has " + std::to_string(check.positions.size()) + " rows"});
    }
  }
  return issues;
}

Dataset::Dataset(DatasetTables tables, const DatasetConfig& config) : tables_(std::move(tables)) {
  config.validate();
  if (auto issues = check(tables_, config); !issues.empty()) throw ValidationError(std::move(issues));

  professor_index_.reserve(tables_.professors.size());
  for (std::size_t i = 0; i < tables_.professors.size(); ++i) professor_index_.emplace(tables_.professors[i].id, i);
  publication_index_.reserve(tables_.publications.size());
  for (std::size_t i = 0; i < tables_.publications.size(); ++i) {
    publication_index_.emplace(tables_.publications[i].id, i);
  }

  bylines_.assign(tables_.publications.size(), {});
  by_professor_.assign(tables_.professors.size(), {});
  for (std::size_t i = 0; i < tables_.authorships.size(); ++i) {
    const auto& a = tables_.authorships[i];
    const std::size_t pub = publication_index_.at(a.publication_id);
    bylines_[pub].push_back(i);
    if (a.professor_id) {
      by_professor_[professor_index_.at(*a.professor_id)].push_back({pub, a.byline_position});
    }
  }
  for (auto& line : bylines_) {
    std::sort(line.begin(), line.end(), [this](std::size_t l, std::size_t r) {
      return tables_.authorships[l].byline_position < tables_.authorships[r].byline_position;
    });
  }
  for (auto& list : by_professor_) {
    std::sort(list.begin(), list.end(),
              [](const ProfessorAuthorship& l, const ProfessorAuthorship& r) { return l.publication < r.publication; });
  }
}

std::optional<std::size_t> Dataset::find_professor(std::string_view id) const {
  if (auto it = professor_index_.find(std::string(id)); it != professor_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Dataset::find_publication(std::string_view id) const {
  if (auto it = publication_index_.find(std::string(id)); it != publication_index_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string_view> Dataset::affiliation(const Authorship& authorship) const {
  if (authorship.author_university_id && !authorship.author_university_id->empty()) {
    return std::string_view(*authorship.author_university_id);
  }
  if (authorship.professor_id) {
    if (auto idx = find_professor(*authorship.professor_id)) {
      return std::string_view(tables_.professors[*idx].university_id);
    }
  }
  return std::nullopt;
}

const FieldAssignment& Dataset::field_of(const Professor& professor) const {
  return tables_.field_scheme.find(professor.sds_id)->second;
}

double Dataset::salary_of(const Professor& professor) const {
  return tables_.salaries.find(professor.rank)->second;
}

}  // namespace unirank
