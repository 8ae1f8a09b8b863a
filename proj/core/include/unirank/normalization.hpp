#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "unirank/types.hpp"

namespace unirank {

/// Mean citations of cited publications per (year, subject category).
class CitationBaselines {
 public:
  using Key = std::pair<int, std::string>;

  /// Throws ValidationError unless mean_citations is finite and > 0.
  void set(int year, std::string subject_category, double mean_citations);
  std::optional<double> lookup(int year, std::string_view subject_category) const;

  const std::map<Key, double>& cells() const noexcept { return cells_; }
  std::size_t size() const noexcept { return cells_.size(); }
  bool empty() const noexcept { return cells_.empty(); }

  bool operator==(const CitationBaselines&) const = default;

 private:
  std::map<Key, double> cells_;
};

/// Builds baselines from a reference corpus: in each (year, category) cell the
/// arithmetic mean citations of the publications with at least one citation.
/// Multi-category publications enter every one of their cells. Cells without
/// cited publications are absent.
CitationBaselines build_baselines(std::span<const Publication> reference_corpus);

/// c / c̄ for one publication. Uncited publications score 0 without a lookup;
/// for several categories c̄ is the mean of their baselines. Throws
/// ComputationError naming the cell when a cited publication's baseline is missing.
double normalized_impact(const Publication& publication, const CitationBaselines& baselines);

}  // namespace unirank
