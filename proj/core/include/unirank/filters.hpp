#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "unirank/model.hpp"

namespace unirank {

struct FilterCounts {
  std::size_t professors_short_tenure = 0;
  std::size_t publications_excluded_doc_type = 0;
  std::size_t publications_outside_window = 0;
  std::size_t authorships_removed = 0;
  std::size_t authorships_detached = 0;  // professor dropped, byline slot kept as external

  bool operator==(const FilterCounts&) const = default;
};

struct FilteredDataset {
  Dataset dataset;
  FilterCounts removed;
};

/// Drops professors below the tenure threshold, publications of an excluded
/// document type or outside the observation window, and the authorships of
/// dropped publications. A dropped professor's byline slots stay in place
/// with the professor link cleared and the affiliation pinned, so byline
/// sizes and intramural classification do not change. Idempotent.
FilteredDataset apply_filters(const Dataset& dataset, const DatasetConfig& config);

/// (university, field) pair a ranking is computed over. field_id is the SDS,
/// the UDA, or empty for the overall university.
struct EntityKey {
  std::string university_id;
  std::string field_id;

  auto operator<=>(const EntityKey&) const = default;
};

/// Field of `professor` at `scope` (sds, uda or "" for overall).
std::string field_at_scope(const Dataset& dataset, const Professor& professor, Scope scope);

/// Staff headcount of every (university, field) at `scope`.
std::map<EntityKey, std::size_t> staff_counts(const Dataset& dataset, Scope scope);

int staff_threshold(Scope scope, const DatasetConfig& config);

/// Entities whose staff meets the scope threshold, sorted. Throws
/// ValidationError for Scope::professor.
std::vector<EntityKey> eligible_population(const Dataset& dataset, Scope scope,
                                           const DatasetConfig& config);

}  // namespace unirank
