#include "unirank/credit.hpp"

#include <cmath>

#include "unirank/model.hpp"
#include "unirank/summation.hpp"

namespace unirank {

void CreditWeights::validate() const {
  std::vector<Issue> issues;
  auto fail = [&](std::string message) { issues.push_back(Issue{"config", 0, 0, std::move(message)}); };
  for (double share : {intramural_end, extramural_end, extramural_inner}) {
    if (!std::isfinite(share) || share < 0.0) fail("credit shares must be finite and non-negative");
  }
  if (intramural_end <= 0.0 || extramural_end <= 0.0) fail("end-author credit share must be > 0");
  if (2.0 * intramural_end > 1.0 + 1e-12) fail("intramural end shares exceed 1");
  if (2.0 * (extramural_end + extramural_inner) > 1.0 + 1e-12) fail("extramural role shares exceed 1");
  if (!issues.empty()) throw ValidationError(std::move(issues));
}

double CreditVector::sum() const noexcept { return compensated_sum(weights); }

CreditVector credit_alphabetical(std::size_t total_authors) {
  if (total_authors < 1) throw ValidationError("alphabetical credit needs at least one author");
  return CreditVector{std::vector<double>(total_authors, 1.0 / static_cast<double>(total_authors))};
}

CreditVector credit_positional(std::size_t total_authors, BylineKind kind, const CreditWeights& weights) {
  if (total_authors < 1) throw ValidationError("positional credit needs a non-empty byline");
  const std::size_t n = total_authors;
  std::vector<double> w(n, 0.0);
  std::vector<bool> has_role(n, false);
  auto give = [&](std::size_t index, double share) {
    w[index] += share;
    has_role[index] = true;
  };

  double residual = 1.0;
  if (kind == BylineKind::intramural) {
    give(0, weights.intramural_end);
    give(n - 1, weights.intramural_end);
    residual -= 2.0 * weights.intramural_end;
  } else {
    give(0, weights.extramural_end);
    give(n - 1, weights.extramural_end);
    if (n >= 2) {
      give(1, weights.extramural_inner);
      give(n - 2, weights.extramural_inner);
    } else {
      give(0, 2.0 * weights.extramural_inner);
    }
    residual -= 2.0 * (weights.extramural_end + weights.extramural_inner);
  }

  std::size_t others = 0;
  for (bool role : has_role) others += role ? 0 : 1;

  if (others > 0) {
    const double each = residual / static_cast<double>(others);
    for (std::size_t i = 0; i < n; ++i) {
      if (!has_role[i]) w[i] = each;
    }
  } else {
    // Nobody left for the residual: renormalize the role shares.
    const double total = compensated_sum(w);
    for (double& x : w) x /= total;
  }
  return CreditVector{std::move(w)};
}

BylineKind classify_byline(std::span<const std::optional<std::string>> affiliations) {
  if (affiliations.size() <= 1) return BylineKind::intramural;
  const auto& first = affiliations.front();
  const auto& last = affiliations.back();
  if (first && last && !first->empty() && *first == *last) return BylineKind::intramural;
  return BylineKind::extramural;
}

CreditVector publication_credit(const Dataset& dataset, std::size_t publication, bool position_weighted,
                                const CreditWeights& weights) {
  const auto byline = dataset.byline(publication);
  if (!position_weighted) return credit_alphabetical(byline.size());
  std::vector<std::optional<std::string>> affiliations;
  affiliations.reserve(byline.size());
  for (std::size_t idx : byline) {
    auto affiliation = dataset.affiliation(dataset.authorships()[idx]);
    affiliations.push_back(affiliation ? std::optional<std::string>(std::string(*affiliation)) : std::nullopt);
  }
  return credit_positional(byline.size(), classify_byline(affiliations), weights);
}

double fractional_share(const Dataset& dataset, std::size_t publication, std::string_view professor_id,
                        const CreditWeights& weights) {
  const auto byline = dataset.byline(publication);
  const auto& pub = dataset.publications()[publication];
  for (std::size_t idx : byline) {
    const auto& a = dataset.authorships()[idx];
    if (a.professor_id && *a.professor_id == professor_id) {
      const auto& professor = dataset.professors()[*dataset.find_professor(professor_id)];
      const bool positional = dataset.field_of(professor).convention == CountingConvention::position_weighted;
      return publication_credit(dataset, publication, positional, weights).at_position(a.byline_position);
    }
  }
  throw ComputationError("professor '" + std::string(professor_id) + "' is not on the byline of publication '" +
                         pub.id + "'");
}

}  // namespace unirank
