#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unirank {

struct Professor {
  std::string id;
  std::string university_id;
  std::string sds_id;
  std::string rank;
  int years_active = 0;  // years on staff within the observation window

  bool operator==(const Professor&) const = default;
};

struct Publication {
  std::string id;
  int year = 0;
  std::int64_t citations = 0;
  std::string doc_type;
  std::vector<std::string> subject_categories;

  bool operator==(const Publication&) const = default;
};

/// One byline slot. External co-authors have no professor_id.
struct Authorship {
  std::string publication_id;
  int byline_position = 0;  // 1-based
  int total_authors = 0;
  std::optional<std::string> professor_id;
  std::optional<std::string> author_university_id;

  bool operator==(const Authorship&) const = default;
};

enum class CountingConvention { alphabetical, position_weighted };

std::string_view to_string(CountingConvention convention) noexcept;
std::optional<CountingConvention> parse_counting_convention(std::string_view text) noexcept;

struct FieldAssignment {
  std::string uda_id;
  CountingConvention convention = CountingConvention::alphabetical;

  bool operator==(const FieldAssignment&) const = default;
};

/// sds_id -> (uda_id, counting convention).
using FieldScheme = std::map<std::string, FieldAssignment, std::less<>>;

/// Academic rank -> average yearly salary.
using SalaryTable = std::map<std::string, double, std::less<>>;

/// Aggregation level of a score or a ranking.
enum class Scope { professor, sds, uda, overall };

std::string_view to_string(Scope scope) noexcept;
/// Throws ValidationError on an unknown label.
Scope parse_scope(std::string_view text);

}  // namespace unirank
