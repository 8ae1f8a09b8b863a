#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unirank {

class Dataset;

/// Positional credit percentages for bylines that encode contribution order.
/// The middle pool is whatever the end (and inner) roles leave over.
struct CreditWeights {
  double intramural_end = 0.40;    // first and last author, same university
  double extramural_end = 0.30;    // first and last author, different universities
  double extramural_inner = 0.15;  // second and second-to-last author

  /// Throws ValidationError when shares are negative or exceed the whole.
  void validate() const;
};

enum class BylineKind { intramural, extramural };

/// Per-position credit for one publication; weights[p - 1] is the share of
/// byline position p.
struct CreditVector {
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  double at_position(int position) const { return weights.at(static_cast<std::size_t>(position) - 1); }
  double sum() const noexcept;
};

/// Every author gets 1/total_authors.
CreditVector credit_alphabetical(std::size_t total_authors);

/// Role-based credit. First and last authors take the end share; extramural
/// bylines also give the inner share to the second and second-to-last authors;
/// the residual is split equally among the remaining authors. When roles land
/// on the same author they accumulate, and when no author is left for the
/// residual the vector is renormalized to sum to one. Small bylines therefore
/// come out as {1} and {0.5, 0.5}.
CreditVector credit_positional(std::size_t total_authors, BylineKind kind,
                               const CreditWeights& weights = {});

/// Intramural iff first and last authors carry the same university. A missing
/// affiliation counts as external; a single author is always intramural.
BylineKind classify_byline(std::span<const std::optional<std::string>> affiliations);

/// Share of `professor_id` in publication `publication` under the counting
/// convention of the professor's SDS. Throws ComputationError when the
/// professor is not on the byline.
double fractional_share(const Dataset& dataset, std::size_t publication,
                        std::string_view professor_id, const CreditWeights& weights = {});

/// Credit vector of a dataset publication under `convention`.
CreditVector publication_credit(const Dataset& dataset, std::size_t publication,
                                bool position_weighted, const CreditWeights& weights = {});

}  // namespace unirank
