#include <benchmark/benchmark.h>

#include <random>

#include "unirank/credit.hpp"
#include "unirank/filters.hpp"
#include "unirank/indicators.hpp"
#include "unirank/ranking.hpp"
#include "unirank/synth.hpp"

namespace {

using namespace unirank;

DatasetTables corpus(std::size_t universities) {
  SynthSpec spec;
  spec.universities = universities;
  spec.udas = 4;
  spec.sds = 16;
  spec.professors_min = 4;
  spec.professors_max = 12;
  spec.seed = 17;
  return generate(spec);
}

void BM_PositionalCredit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(credit_positional(n, BylineKind::extramural));
}
BENCHMARK(BM_PositionalCredit)->Arg(4)->Arg(12)->Arg(50);

void BM_EngineConstruction(benchmark::State& state) {
  const auto tables = corpus(static_cast<std::size_t>(state.range(0)));
  const DatasetConfig config;
  const auto filtered = apply_filters(Dataset(tables, config), config);
  for (auto _ : state) {
    IndicatorEngine engine(filtered.dataset, *filtered.dataset.baselines(), config);
    benchmark::DoNotOptimize(engine.national_mean_fss_p("SDS01"));
  }
  state.counters["publications"] = static_cast<double>(tables.publications.size());
}
BENCHMARK(BM_EngineConstruction)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ScoresAllScopes(benchmark::State& state) {
  const auto tables = corpus(40);
  DatasetConfig config;
  const auto filtered = apply_filters(Dataset(tables, config), config);
  const IndicatorEngine engine(filtered.dataset, *filtered.dataset.baselines(), config);
  for (auto _ : state) {
    for (auto scope : {Scope::sds, Scope::uda, Scope::overall}) {
      benchmark::DoNotOptimize(engine.scores(Indicator::fss_up, scope));
      benchmark::DoNotOptimize(engine.scores(scope == Scope::sds ? Indicator::fss_s : Indicator::fss_us, scope));
    }
  }
}
BENCHMARK(BM_ScoresAllScopes)->Unit(benchmark::kMillisecond);

void BM_RankAndCompare(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::normal_distribution<double> noise(0.0, 0.2);
  std::vector<ScoreEntry> a, b;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = static_cast<double>(i);
    a.push_back({"U" + std::to_string(i), v});
    b.push_back({"U" + std::to_string(i), v * (1.0 + noise(rng))});
  }
  for (auto _ : state) benchmark::DoNotOptimize(compare(rank(a), rank(b)));
}
BENCHMARK(BM_RankAndCompare)->Arg(25)->Arg(100)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
