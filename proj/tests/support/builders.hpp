#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unirank/model.hpp"

namespace unirank::testing {

/// Small in-memory corpora for unit tests. Every publication categorised as
/// "CAT" in 2010 scores c / 5 by default.
struct TablesBuilder {
  DatasetTables tables;

  TablesBuilder() {
    tables.salaries = {{"full", 100000.0}, {"associate", 70000.0}, {"assistant", 50000.0}};
    tables.field_scheme = {{"SDS_A", {"UDA_1", CountingConvention::alphabetical}},
                           {"SDS_B", {"UDA_1", CountingConvention::position_weighted}},
                           {"SDS_C", {"UDA_2", CountingConvention::alphabetical}}};
    CitationBaselines b;
    for (int year = 2008; year <= 2012; ++year) {
      b.set(year, "CAT", 5.0);
      b.set(year, "CAT2", 10.0);
    }
    tables.baselines = b;
  }

  TablesBuilder& professor(std::string id, std::string university, std::string sds, std::string rank = "full",
                           int years = 5) {
    tables.professors.push_back({std::move(id), std::move(university), std::move(sds), std::move(rank), years});
    return *this;
  }

  /// Byline entries: professor id, or "@UNIV" for an external author with an
  /// affiliation, or "" for an external author without one.
  TablesBuilder& publication(std::string id, std::int64_t citations, const std::vector<std::string>& byline,
                             int year = 2010, std::vector<std::string> categories = {"CAT"},
                             std::string doc_type = "article") {
    tables.publications.push_back({id, year, citations, std::move(doc_type), std::move(categories)});
    const int n = static_cast<int>(byline.size());
    for (int k = 0; k < n; ++k) {
      Authorship a{id, k + 1, n, std::nullopt, std::nullopt};
      const auto& entry = byline[static_cast<std::size_t>(k)];
      if (!entry.empty() && entry[0] == '@') {
        a.author_university_id = entry.substr(1);
      } else if (!entry.empty()) {
        a.professor_id = entry;
      }
      tables.authorships.push_back(std::move(a));
    }
    return *this;
  }

  Dataset build(const DatasetConfig& config = {}) const { return Dataset(tables, config); }
};

/// Fresh scratch directory under the system temp path.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("unirank_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline double relative_error(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace unirank::testing
