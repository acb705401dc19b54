// Serial reference kernels against their OpenMP builds.

#include <map>

#include <benchmark/benchmark.h>

#include "bfforms/sweep.hpp"

using namespace bfforms;

namespace {

const std::vector<FunctionIndex>& draws(unsigned n) {
  static std::map<unsigned, std::vector<FunctionIndex>> cache;
  auto& v = cache[n];
  if (v.empty()) v = sample_uniform(n, 2048, 1);
  return v;
}

void BM_AnalyzeSerial(benchmark::State& state) {
  const auto& fs = draws(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_serial(fs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}

void BM_AnalyzeParallel(benchmark::State& state) {
  const auto& fs = draws(static_cast<unsigned>(state.range(0)));
  const auto jobs = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(analyze_parallel(fs, jobs));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(fs.size()));
}

const std::vector<SweepRecord>& l4_records() {
  static const std::vector<SweepRecord> records = sweep(4, 0).records(Criterion::S_s);
  return records;
}

void BM_TallySerial(benchmark::State& state) {
  const auto& r = l4_records();
  for (auto _ : state) benchmark::DoNotOptimize(tally_serial(r, Criterion::S_s));
}

void BM_TallyParallel(benchmark::State& state) {
  const auto& r = l4_records();
  for (auto _ : state) benchmark::DoNotOptimize(tally_parallel(r, Criterion::S_s, static_cast<unsigned>(state.range(0))));
}

void BM_SopMinimize(benchmark::State& state) {
  const auto& fs = draws(static_cast<unsigned>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(minimize_sop(tt_from_index(fs[i++ % fs.size()])));
}

void BM_PolarityScans(benchmark::State& state) {
  const auto& fs = draws(static_cast<unsigned>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const TruthTable tt = tt_from_index(fs[i++ % fs.size()]);
    benchmark::DoNotOptimize(best_polarity_all(tt));
    benchmark::DoNotOptimize(best_arith_polarity_all(tt));
  }
}

}  // namespace

BENCHMARK(BM_AnalyzeSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AnalyzeParallel)->ArgsProduct({{4, 5}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_TallySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TallyParallel)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SopMinimize)->Arg(4)->Arg(5);
BENCHMARK(BM_PolarityScans)->Arg(4)->Arg(5);

BENCHMARK_MAIN();
