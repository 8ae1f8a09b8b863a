#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "unirank/credit.hpp"
#include "unirank/error.hpp"
#include "unirank/normalization.hpp"
#include "unirank/types.hpp"

namespace unirank {

struct DatasetConfig {
  int window_start = 2008;
  int window_end = 2012;
  int min_tenure_years = 3;
  std::vector<std::string> excluded_doc_types{"editorial material", "meeting abstract",
                                              "reply"};
  int min_staff_sds = 2;
  int min_staff_uda = 10;
  int min_staff_overall = 30;
  CreditWeights credit;

  int window_length() const noexcept { return window_end - window_start + 1; }

  /// Throws ValidationError when a field is out of range.
  void validate() const;
};

/// The raw input tables, exactly as read from (or written to) disk.
struct DatasetTables {
  std::vector<Professor> professors;
  std::vector<Publication> publications;
  std::vector<Authorship> authorships;
  SalaryTable salaries;
  FieldScheme field_scheme;
  std::optional<CitationBaselines> baselines;
};

/// One professor's slot in a publication's byline.
struct ProfessorAuthorship {
  std::size_t publication = 0;  // index into publications()
  int byline_position = 0;
};

/// Validated, cross-referenced, immutable dataset.
class Dataset {
 public:
  /// Validates `tables` against `config` and builds the lookup indexes.
  /// Throws ValidationError listing every problem found.
  Dataset(DatasetTables tables, const DatasetConfig& config);

  /// Collects problems without throwing. Empty means the tables are valid.
  static std::vector<Issue> check(const DatasetTables& tables, const DatasetConfig& config);

  const DatasetTables& tables() const noexcept { return tables_; }
  std::span<const Professor> professors() const noexcept { return tables_.professors; }
  std::span<const Publication> publications() const noexcept { return tables_.publications; }
  std::span<const Authorship> authorships() const noexcept { return tables_.authorships; }
  const SalaryTable& salaries() const noexcept { return tables_.salaries; }
  const FieldScheme& field_scheme() const noexcept { return tables_.field_scheme; }
  const std::optional<CitationBaselines>& baselines() const noexcept { return tables_.baselines; }

  std::optional<std::size_t> find_professor(std::string_view id) const;
  std::optional<std::size_t> find_publication(std::string_view id) const;

  /// Authorship indexes of a publication ordered by byline position.
  std::span<const std::size_t> byline(std::size_t publication) const noexcept {
    return bylines_[publication];
  }

  /// Publications of a professor, ordered by publication index.
  std::span<const ProfessorAuthorship> authorships_of(std::size_t professor) const noexcept {
    return by_professor_[professor];
  }

  /// Affiliation used for byline classification: the declared
  /// author_university_id, else the university of the linked professor.
  std::optional<std::string_view> affiliation(const Authorship& authorship) const;

  const FieldAssignment& field_of(const Professor& professor) const;
  double salary_of(const Professor& professor) const;

 private:
  DatasetTables tables_;
  std::unordered_map<std::string, std::size_t> professor_index_;
  std::unordered_map<std::string, std::size_t> publication_index_;
  std::vector<std::vector<std::size_t>> bylines_;
  std::vector<std::vector<ProfessorAuthorship>> by_professor_;
};

}  // namespace unirank
