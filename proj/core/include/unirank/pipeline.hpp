#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "unirank/indicators.hpp"
#include "unirank/model.hpp"

namespace unirank {

enum class BaselineSource { ingest, build };

/// Everything one compute or compare run needs.
struct RunSpec {
  std::filesystem::path data_dir;
  DatasetConfig config;
  IndicatorFamily family = IndicatorFamily::fss;
  std::vector<Scope> scopes{Scope::sds, Scope::uda, Scope::overall};
  std::filesystem::path out_dir = ".";
  std::filesystem::path scores_dir;  // compare input; defaults to out_dir
  BaselineSource baselines = BaselineSource::ingest;
  bool print_tables = false;  // compare: print every ranking table to the log

  /// Throws ValidationError when no scope is requested or one is invalid.
  void validate() const;
};

/// Process exit codes of the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitComputation = 2;

/// Prints issues and filter impact. Returns kExitOk or kExitValidation.
int run_validate(const std::filesystem::path& data_dir, const DatasetConfig& config,
                 std::ostream& out);

/// scores_<family>_<scope>.csv naming used by compute and compare.
std::filesystem::path scores_path(const std::filesystem::path& dir, IndicatorFamily family,
                                  Scope scope);

/// Writes the professor-level file plus one score file per requested scope.
/// Output is byte-identical for identical inputs. Returns the files written.
std::vector<std::filesystem::path> run_compute(const RunSpec& spec, std::ostream& log);

/// Reads the score files of a prior compute and writes comparison, summary
/// and plot data per scope. Returns the files written.
std::vector<std::filesystem::path> run_compare(const RunSpec& spec, std::ostream& log);

}  // namespace unirank
