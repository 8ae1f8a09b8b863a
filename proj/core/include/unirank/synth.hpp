#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unirank/indicators.hpp"
#include "unirank/model.hpp"

namespace unirank {

/// Parameters of the synthetic corpus generator. Latent productivity of a
/// professor is exp(university effect + individual effect), each effect
/// normal with its own standard deviation, so within- and between-university
/// dispersion are tuned independently.
struct SynthSpec {
  std::size_t universities = 5;
  std::size_t udas = 2;
  std::size_t sds = 4;               // spread round-robin over the UDAs
  std::size_t professors_min = 2;    // per (university, SDS)
  std::size_t professors_max = 8;
  double position_weighted_share = 0.25;  // share of SDSs using byline order
  std::size_t publications = 0;      // 0: publications_per_professor * professors
  double publications_per_professor = 5.0;
  double university_sd = 0.4;
  double individual_sd = 0.8;
  double citation_mean = 8.0;
  std::size_t max_authors = 8;
  double internal_coauthor_rate = 0.6;
  double uncited_share = 0.15;
  std::size_t short_tenure_professors = 0;  // planted below min_tenure_years
  std::size_t excluded_publications = 0;    // planted with an excluded doc type
  int min_tenure_years = 3;
  int window_start = 2008;
  int window_end = 2012;
  std::uint64_t seed = 42;

  /// Throws ValidationError on counts < 1 or negative dispersion.
  void validate() const;
};

/// Generates the six input tables. Deterministic in every SynthSpec field, seed included,
/// on every platform (mt19937_64 plus explicit transforms). Baselines cover
/// every (year, category) cell.
DatasetTables generate(const SynthSpec& spec);

/// Straightforward brute-force scoring of raw tables, written independently
/// of IndicatorEngine: every FSS and MNCS indicator at every scope over the
/// eligible population. Use as ground truth against the engine.
std::vector<IndicatorScore> brute_force_scores(const DatasetTables& tables,
                                               const DatasetConfig& config);

}  // namespace unirank
