// unirank: command-line front end for the indicator pipeline.
//
//   unirank validate --data DIR
//   unirank compute  --data DIR --indicator fss --scope sds --out OUT
//   unirank compare  --indicator fss --scope sds --scores OUT --out OUT
//   unirank synth    --out DIR --seed 42 [--ground-truth]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "unirank/config.hpp"
#include "unirank/dataset_io.hpp"
#include "unirank/pipeline.hpp"
#include "unirank/report.hpp"
#include "unirank/synth.hpp"

namespace {

using namespace unirank;

/// Config file plus per-field flag overrides, resolved after parsing.
struct ConfigFlags {
  std::string path;
  std::optional<int> window_start, window_end, min_tenure;
  std::optional<int> min_staff_sds, min_staff_uda, min_staff_overall;

  void attach(CLI::App& app) {
    app.add_option("--config", path, "INI-style dataset configuration file")->check(CLI::ExistingFile);
    app.add_option("--window-start", window_start, "First year of the observation window");
    app.add_option("--window-end", window_end, "Last year of the observation window");
    app.add_option("--min-tenure", min_tenure, "Minimum years on staff");
    app.add_option("--min-staff-sds", min_staff_sds, "Staff threshold for SDS rankings");
    app.add_option("--min-staff-uda", min_staff_uda, "Staff threshold for UDA rankings");
    app.add_option("--min-staff-overall", min_staff_overall, "Staff threshold for overall rankings");
  }

  DatasetConfig resolve() const {
    DatasetConfig config = path.empty() ? DatasetConfig{} : load_config(path);
    if (window_start) config.window_start = *window_start;
    if (window_end) config.window_end = *window_end;
    if (min_tenure) config.min_tenure_years = *min_tenure;
    if (min_staff_sds) config.min_staff_sds = *min_staff_sds;
    if (min_staff_uda) config.min_staff_uda = *min_staff_uda;
    if (min_staff_overall) config.min_staff_overall = *min_staff_overall;
    config.validate();
    return config;
  }
};

struct RunFlags {
  std::string data, out = ".", scores, indicator = "fss", baselines = "ingest";
  std::vector<std::string> scopes;
  bool tables = false;

  RunSpec resolve(const ConfigFlags& config) const {
    RunSpec spec;
    spec.data_dir = data;
    spec.config = config.resolve();
    spec.family = parse_indicator_family(indicator);
    if (!scopes.empty()) {
      spec.scopes.clear();
      for (const auto& s : scopes) spec.scopes.push_back(parse_scope(s));
    }
    spec.out_dir = out;
    spec.scores_dir = scores.empty() ? std::filesystem::path(out) : std::filesystem::path(scores);
    spec.baselines = baselines == "build" ? BaselineSource::build : BaselineSource::ingest;
    spec.print_tables = tables;
    spec.validate();
    return spec;
  }
};

void add_run_options(CLI::App& app, RunFlags& flags) {
  app.add_option("--indicator", flags.indicator, "Indicator family")
      ->check(CLI::IsMember({"fss", "mncs"}))
      ->capture_default_str();
  app.add_option("--scope", flags.scopes, "Aggregation scope, repeatable (default: all)")
      ->check(CLI::IsMember({"sds", "uda", "overall"}));
  app.add_option("--out", flags.out, "Output directory")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"University research-productivity indicators and ranking comparison"};
  app.require_subcommand(1);

  ConfigFlags config_flags;
  RunFlags run_flags;

  auto* validate = app.add_subcommand("validate", "Check the input tables and report filter impact");
  validate->add_option("--data", run_flags.data, "Directory holding the input CSV files")
      ->required()
      ->check(CLI::ExistingDirectory);
  config_flags.attach(*validate);

  auto* compute = app.add_subcommand("compute", "Write score files for the requested scopes");
  compute->add_option("--data", run_flags.data, "Directory holding the input CSV files")
      ->required()
      ->check(CLI::ExistingDirectory);
  compute->add_option("--baselines", run_flags.baselines, "Citation baselines: ingested file or built from the corpus")
      ->check(CLI::IsMember({"ingest", "build"}))
      ->capture_default_str();
  add_run_options(*compute, run_flags);
  config_flags.attach(*compute);

  auto* compare = app.add_subcommand("compare", "Compare the two aggregation methods per scope");
  compare->add_option("--data", run_flags.data, "Input directory, used for the per-UDA rollup")
      ->check(CLI::ExistingDirectory);
  compare->add_option("--scores", run_flags.scores, "Directory of score files (default: --out)");
  compare->add_flag("--tables", run_flags.tables, "Print every ranking table");
  add_run_options(*compare, run_flags);
  config_flags.attach(*compare);

  SynthSpec synth_spec;
  std::string synth_out = ".";
  bool ground_truth = false;
  auto* synth = app.add_subcommand("synth", "Generate a seeded synthetic corpus");
  synth->add_option("--out", synth_out, "Output directory")->capture_default_str();
  synth->add_option("--seed", synth_spec.seed, "Random seed")->capture_default_str();
  synth->add_option("--universities", synth_spec.universities)->capture_default_str();
  synth->add_option("--udas", synth_spec.udas)->capture_default_str();
  synth->add_option("--sds", synth_spec.sds)->capture_default_str();
  synth->add_option("--professors-min", synth_spec.professors_min, "Per university and SDS")->capture_default_str();
  synth->add_option("--professors-max", synth_spec.professors_max, "Per university and SDS")->capture_default_str();
  synth->add_option("--publications", synth_spec.publications, "Total count; 0 uses the per-professor rate")
      ->capture_default_str();
  synth->add_option("--publications-per-professor", synth_spec.publications_per_professor)->capture_default_str();
  synth->add_option("--position-weighted-share", synth_spec.position_weighted_share)->capture_default_str();
  synth->add_option("--university-sd", synth_spec.university_sd, "Between-university dispersion")
      ->capture_default_str();
  synth->add_option("--individual-sd", synth_spec.individual_sd, "Within-university dispersion")
      ->capture_default_str();
  synth->add_option("--citation-mean", synth_spec.citation_mean)->capture_default_str();
  synth->add_option("--max-authors", synth_spec.max_authors)->capture_default_str();
  synth->add_option("--short-tenure", synth_spec.short_tenure_professors, "Plant professors below the tenure filter")
      ->capture_default_str();
  synth->add_option("--excluded-publications", synth_spec.excluded_publications,
                    "Plant publications with an excluded document type")
      ->capture_default_str();
  synth->add_option("--min-tenure", synth_spec.min_tenure_years)->capture_default_str();
  synth->add_option("--window-start", synth_spec.window_start)->capture_default_str();
  synth->add_option("--window-end", synth_spec.window_end)->capture_default_str();
  synth->add_flag("--ground-truth", ground_truth, "Also write brute-force scores to ground_truth.csv");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return run_validate(run_flags.data, config_flags.resolve(), std::cout);
    if (*compute) {
      for (const auto& path : run_compute(run_flags.resolve(config_flags), std::cerr)) std::cout << path.string() << '\n';
      return kExitOk;
    }
    if (*compare) {
      for (const auto& path : run_compare(run_flags.resolve(config_flags), std::cerr)) std::cout << path.string() << '\n';
      return kExitOk;
    }
    if (*synth) {
      const auto tables = generate(synth_spec);
      std::filesystem::create_directories(synth_out);
      write_tables(tables, synth_out);
      if (ground_truth) {
        DatasetConfig config;
        config.window_start = synth_spec.window_start;
        config.window_end = synth_spec.window_end;
        config.min_tenure_years = synth_spec.min_tenure_years;
        const auto path = std::filesystem::path(synth_out) / "ground_truth.csv";
        std::ofstream out(path, std::ios::binary);
        write_scores(out, brute_force_scores(tables, config));
        if (!out) throw Error("cannot write " + path.string());
      }
      std::cout << tables.professors.size() << " professors, " << tables.publications.size() << " publications, "
                << tables.authorships.size() << " authorships written to " << synth_out << '\n';
      return kExitOk;
    }
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ComputationError& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitOk;
}
