#include "unirank/normalization.hpp"

#include <cmath>

#include "unirank/error.hpp"
#include "unirank/summation.hpp"

namespace unirank {

void CitationBaselines::set(int year, std::string subject_category, double mean_citations) {
  if (!std::isfinite(mean_citations) || mean_citations <= 0.0) {
    throw ValidationError("baseline for (" + std::to_string(year) + ", " + subject_category + ") must be > 0");
  }
  cells_[Key{year, std::move(subject_category)}] = mean_citations;
}

std::optional<double> CitationBaselines::lookup(int year, std::string_view subject_category) const {
  if (auto it = cells_.find(Key{year, std::string(subject_category)}); it != cells_.end()) return it->second;
  return std::nullopt;
}

CitationBaselines build_baselines(std::span<const Publication> reference_corpus) {
  struct Accumulator {
    CompensatedSum citations;
    std::size_t count = 0;
  };
  std::map<CitationBaselines::Key, Accumulator> cells;
  for (const auto& pub : reference_corpus) {
    if (pub.citations < 1) continue;
    for (const auto& category : pub.subject_categories) {
      auto& cell = cells[{pub.year, category}];
      cell.citations += static_cast<double>(pub.citations);
      ++cell.count;
    }
  }
  CitationBaselines baselines;
  for (auto& [key, cell] : cells) {
    baselines.set(key.first, key.second, cell.citations.value() / static_cast<double>(cell.count));
  }
  return baselines;
}

double normalized_impact(const Publication& publication, const CitationBaselines& baselines) {
  if (publication.citations == 0) return 0.0;
  CompensatedSum sum;
  for (const auto& category : publication.subject_categories) {
    auto baseline = baselines.lookup(publication.year, category);
    if (!baseline) {
      throw ComputationError("missing citation baseline for (" + std::to_string(publication.year) + ", " + category +
                             ") needed by publication '" + publication.id + "'");
    }
    sum += *baseline;
  }
  if (publication.subject_categories.empty()) {
    throw ComputationError("publication '" + publication.id + "' has no subject category");
  }
  const double mean_baseline = sum.value() / static_cast<double>(publication.subject_categories.size());
  return static_cast<double>(publication.citations) / mean_baseline;
}

}  // namespace unirank
