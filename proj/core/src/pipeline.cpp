#include "unirank/pipeline.hpp"

#include <fstream>
#include <ostream>

#include "unirank/csv.hpp"
#include "unirank/dataset_io.hpp"
#include "unirank/filters.hpp"
#include "unirank/report.hpp"

namespace unirank {

void RunSpec::validate() const {
  if (scopes.empty()) throw ValidationError("at least one scope is required");
  for (Scope s : scopes) {
    if (s == Scope::professor) throw ValidationError("scope must be one of sds, uda, overall");
  }
  config.validate();
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

void print_filter_counts(std::ostream& out, const FilterCounts& counts) {
  out << counts.professors_short_tenure << " professors excluded (tenure)\n"
      << counts.publications_excluded_doc_type << " publications excluded (document type)\n"
      << counts.publications_outside_window << " publications excluded (outside window)\n"
      << counts.authorships_removed << " authorships removed\n";
}

}  // namespace

int run_validate(const std::filesystem::path& data_dir, const DatasetConfig& config, std::ostream& out) {
  std::vector<Issue> issues;
  std::optional<DatasetTables> tables;
  try {
    config.validate();
    tables = read_tables(data_dir);
    issues = Dataset::check(*tables, config);
  } catch (const ValidationError& e) {
    issues = e.issues();
  }
  for (const auto& issue : issues) out << issue.to_string() << '\n';
  if (!issues.empty()) {
    out << issues.size() << (issues.size() == 1 ? " error\n" : " errors\n");
    return kExitValidation;
  }
  const Dataset dataset(std::move(*tables), config);
  const auto filtered = apply_filters(dataset, config);
  out << dataset.professors().size() << " professors, " << dataset.publications().size() << " publications, "
      << dataset.authorships().size() << " authorships\n";
  print_filter_counts(out, filtered.removed);
  out << "0 errors\n";
  return kExitOk;
}

std::filesystem::path scores_path(const std::filesystem::path& dir, IndicatorFamily family, Scope scope) {
  return dir / ("scores_" + std::string(to_string(family)) + "_" + std::string(to_string(scope)) + ".csv");
}

std::vector<std::filesystem::path> run_compute(const RunSpec& spec, std::ostream& log) {
  spec.validate();
  const Dataset dataset = load_dataset(spec.data_dir, spec.config);
  const auto filtered = apply_filters(dataset, spec.config);
  print_filter_counts(log, filtered.removed);

  CitationBaselines baselines;
  if (spec.baselines == BaselineSource::ingest) {
    if (!filtered.dataset.baselines()) {
      throw ValidationError("baselines.csv not found in " + spec.data_dir.string() + " (use --baselines build)");
    }
    baselines = *filtered.dataset.baselines();
  } else {
    baselines = build_baselines(filtered.dataset.publications());
    log << "built " << baselines.size() << " baseline cells from the corpus\n";
  }

  const IndicatorEngine engine(filtered.dataset, baselines, spec.config);
  std::filesystem::create_directories(spec.out_dir);
  std::vector<std::filesystem::path> written;
  std::vector<std::string> skipped;

  const Indicator individual = spec.family == IndicatorFamily::fss ? Indicator::fss_p : Indicator::mncs_p;
  {
    const auto path = scores_path(spec.out_dir, spec.family, Scope::professor);
    auto out = open_output(path);
    write_scores(out, engine.scores(individual, Scope::professor, &skipped));
    written.push_back(path);
  }
  for (Scope scope : spec.scopes) {
    const auto pair = method_pair(spec.family, scope);
    auto scores = engine.scores(pair.individual, scope, &skipped);
    auto field = engine.scores(pair.field, scope, &skipped);
    scores.insert(scores.end(), field.begin(), field.end());
    if (scores.empty()) {
      log << "warning: empty eligible population at scope " << to_string(scope) << '\n';
    }
    const auto path = scores_path(spec.out_dir, spec.family, scope);
    auto out = open_output(path);
    write_scores(out, scores);
    written.push_back(path);
  }
  if (!skipped.empty()) log << "warning: " << skipped.size() << " undefined scores omitted (no publications)\n";
  for (const auto& path : written) log << "wrote " << path.string() << '\n';
  return written;
}

std::vector<std::filesystem::path> run_compare(const RunSpec& spec, std::ostream& log) {
  spec.validate();
  const auto input_dir = spec.scores_dir.empty() ? spec.out_dir : spec.scores_dir;
  std::optional<FieldScheme> scheme;
  if (!spec.data_dir.empty()) {
    const auto path = spec.data_dir / kFieldSchemeFile;
    if (std::filesystem::exists(path)) scheme = read_field_scheme(path);
  }

  std::filesystem::create_directories(spec.out_dir);
  std::vector<std::filesystem::path> written;
  std::vector<FieldComparison> all;
  const std::string family(to_string(spec.family));

  for (Scope scope : spec.scopes) {
    const auto input = scores_path(input_dir, spec.family, scope);
    if (!std::filesystem::exists(input)) {
      throw ValidationError("missing score file " + input.string() + " (run compute first)");
    }
    const auto scores = read_scores(input);
    const auto pair = method_pair(spec.family, scope);
    std::vector<IndicatorScore> a, b;
    for (const auto& s : scores) {
      if (s.scope != scope) continue;
      if (s.indicator == pair.individual) a.push_back(s);
      if (s.indicator == pair.field) b.push_back(s);
    }
    std::vector<std::string> warnings;
    auto comparisons = compare_scores(a, b, scope, &warnings);
    for (const auto& w : warnings) log << "warning: " << w << '\n';

    const std::string suffix = family + "_" + std::string(to_string(scope)) + ".csv";
    auto emit = [&](const std::string& stem, auto writer) {
      const auto path = spec.out_dir / (stem + suffix);
      auto out = open_output(path);
      writer(out, std::span<const FieldComparison>(comparisons));
      written.push_back(path);
    };
    emit("comparison_", write_comparison);
    emit("slopegraph_", write_slopegraph);
    emit("histogram_", write_histogram);

    if (scope == Scope::sds && scheme) {
      const auto path = spec.out_dir / ("rollup_" + family + "_sds_by_uda.csv");
      auto out = open_output(path);
      write_rollup(out, rollup_by_uda(comparisons, *scheme));
      written.push_back(path);
    }

    for (const auto& c : comparisons) {
      if (spec.print_tables) {
        print_comparison(log, c, to_string(pair.individual), to_string(pair.field));
      } else {
        const auto& s = c.report.summary;
        log << to_string(scope) << ' ' << (c.field.empty() ? "all" : c.field) << ": n=" << s.population
            << " rho=" << (c.report.spearman_rho ? csv::format_fixed(*c.report.spearman_rho, 3) : "n/a")
            << " shifting=" << csv::format_fixed(s.pct_shifting, 1) << "% avg=" << csv::format_fixed(s.avg_shift, 2)
            << " (" << csv::format_fixed(s.avg_shift_pct, 1) << ") max=" << s.max_shift << " ("
            << csv::format_fixed(s.max_shift_pct, 1) << ")\n";
      }
    }
    all.insert(all.end(), std::make_move_iterator(comparisons.begin()), std::make_move_iterator(comparisons.end()));
  }

  const auto summary = spec.out_dir / ("summary_" + family + ".csv");
  auto out = open_output(summary);
  write_summary(out, all);
  written.push_back(summary);
  for (const auto& path : written) log << "wrote " << path.string() << '\n';
  return written;
}

}  // namespace unirank
