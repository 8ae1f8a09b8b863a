#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unirank/filters.hpp"
#include "unirank/model.hpp"
#include "unirank/normalization.hpp"

namespace unirank {

enum class Indicator { fss_p, fss_up, fss_s, fss_us, mncs_p, mncs_s, mncs_up, mncs_us };

std::string_view to_string(Indicator indicator) noexcept;
/// Accepts the printed names (FSS_P, FSS_UP, ...). Throws ValidationError.
Indicator parse_indicator(std::string_view text);

/// Which indicator pair a run scores and compares.
enum class IndicatorFamily { fss, mncs };

std::string_view to_string(IndicatorFamily family) noexcept;
IndicatorFamily parse_indicator_family(std::string_view text);

/// The two indicators compared at `scope`: individual-based (A) and
/// field-based (B).
struct MethodPair {
  Indicator individual;
  Indicator field;
};
MethodPair method_pair(IndicatorFamily family, Scope scope);

struct IndicatorScore {
  Indicator indicator = Indicator::fss_p;
  Scope scope = Scope::professor;
  std::string university_id;
  std::string field_id;   // SDS for professors, "" at overall scope
  std::string entity_id;  // professor id, or the university at aggregate scopes
  double value = 0.0;

  bool operator==(const IndicatorScore&) const = default;
};

/// Formula kernels shared by the engine; exposed for direct testing.
namespace formulas {

/// Arithmetic mean over the strictly positive entries; nullopt when none.
std::optional<double> mean_of_positive(std::span<const double> values);

/// sum(score * weight) / sum(weight) over entries with score > 0; nullopt
/// when no entry is positive.
std::optional<double> weighted_mean_of_positive(std::span<const double> scores,
                                                std::span<const double> weights);

/// (1 / n) * sum(score_j / reference_j).
double mean_standardized(std::span<const double> scores, std::span<const double> references);

/// sum((score_k / reference_k) * (weight_k / sum(weight))).
double weighted_standardized(std::span<const double> scores, std::span<const double> references,
                             std::span<const double> weights);

}  // namespace formulas

/// National per-SDS references used to standardize scores across fields.
struct NationalReference {
  std::map<std::string, double, std::less<>> fss_p;   // mean FSS_P of productive professors
  std::map<std::string, double, std::less<>> fss_s;   // salary-weighted mean FSS_S, positive units
  std::map<std::string, double, std::less<>> mncs_p;  // mean MNCS_P of professors with MNCS_P > 0
  std::map<std::string, double, std::less<>> mncs_s;  // salary-weighted mean MNCS_S, positive units
};

/// Computes every indicator over a filtered dataset. Construction does all the
/// per-publication and per-professor work once; afterwards the engine is
/// read-only.
class IndicatorEngine {
 public:
  IndicatorEngine(const Dataset& dataset, const CitationBaselines& baselines,
                  const DatasetConfig& config);

  const Dataset& dataset() const noexcept { return *dataset_; }
  const NationalReference& references() const noexcept { return references_; }

  /// c / c̄ of a publication (0 for publications nobody evaluated authored).
  double impact(std::size_t publication) const { return impacts_.at(publication); }

  /// (1 / w) (1 / t) sum(c / c̄ * f) over the professor's publications.
  double fss_professor(std::size_t professor) const;
  /// Full-counted mean c / c̄; nullopt without publications.
  std::optional<double> mncs_professor(std::size_t professor) const;

  double national_mean_fss_p(std::string_view sds) const;
  double national_weighted_mean_fss_s(std::string_view sds) const;
  double national_mean_mncs_p(std::string_view sds) const;
  double national_weighted_mean_mncs_s(std::string_view sds) const;

  /// Black-box SDS productivity: sum(c / c̄ * f) / sum(salary * t) over the
  /// SDS staff of the university.
  double fss_sds(std::string_view university, std::string_view sds) const;
  /// Mean c / c̄ over the distinct publications of the SDS staff.
  std::optional<double> mncs_sds(std::string_view university, std::string_view sds) const;

  /// Mean of standardized individual scores over all research staff of the
  /// entity (FSS_UP).
  double fss_university_individual(std::string_view university, Scope scope,
                                   std::string_view field) const;
  /// Salary-weighted standardized SDS scores (FSS_US); uda or overall scope.
  double fss_university_field(std::string_view university, Scope scope,
                              std::string_view field) const;

  /// Method A for MNCS: raw mean of MNCS_P at SDS scope, mean of standardized
  /// MNCS_P above it. Professors without publications are skipped.
  std::optional<double> mncs_university_individual(std::string_view university, Scope scope,
                                                   std::string_view field) const;
  /// Method B for MNCS: MNCS_S at SDS scope, salary-weighted standardized
  /// MNCS_S above it over the SDSs with publications.
  std::optional<double> mncs_university_field(std::string_view university, Scope scope,
                                              std::string_view field) const;

  /// Every score of `indicator` at `scope` over the eligible population.
  /// Entities whose MNCS is undefined are omitted and reported in `skipped`.
  std::vector<IndicatorScore> scores(Indicator indicator, Scope scope,
                                     std::vector<std::string>* skipped = nullptr) const;

 private:
  struct Cell {
    std::vector<std::size_t> staff;
    double salary_mass = 0.0;        // sum(salary * years)
    double credited_impact = 0.0;    // sum over staff of sum(c / c̄ * f)
    double pooled_impact = 0.0;      // sum of c / c̄ over distinct publications
    std::size_t publications = 0;    // distinct publications
  };

  const Cell& cell(std::string_view university, std::string_view sds) const;
  const Cell* find_cell(std::string_view university, std::string_view sds) const;
  std::vector<std::size_t> staff_in(std::string_view university, Scope scope,
                                    std::string_view field) const;
  std::vector<std::string> sds_in(std::string_view university, Scope scope,
                                  std::string_view field) const;
  void require_threshold(std::string_view university, Scope scope, std::string_view field) const;
  void build_references();

  const Dataset* dataset_;
  DatasetConfig config_;
  std::vector<double> impacts_;
  std::vector<double> credited_;             // per professor sum(c / c̄ * f)
  std::vector<double> full_impact_;          // per professor sum(c / c̄)
  std::vector<std::size_t> publication_counts_;
  std::map<EntityKey, Cell> cells_;          // keyed by (university, sds)
  NationalReference references_;
};

}  // namespace unirank
