#include "bfforms/sweep.hpp"

#include <algorithm>
#include <exception>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bfforms {

std::vector<SweepRecord> SweepData::records(Criterion criterion) const {
  std::vector<SweepRecord> out;
  out.reserve(functions.size());
  for (const auto& f : functions) out.push_back(f.by_criterion[criterion_slot(criterion)]);
  return out;
}

unsigned effective_jobs(unsigned jobs) {
#ifdef _OPENMP
  return jobs ? jobs : static_cast<unsigned>(omp_get_max_threads());
#else
  (void)jobs;
  return 1;
#endif
}

std::vector<FunctionAnalysis> analyze_serial(std::span<const FunctionIndex> functions,
                                             const MinimizerOptions& options) {
  std::vector<FunctionAnalysis> out;
  out.reserve(functions.size());
  for (const auto& f : functions) out.push_back(analyze_all(tt_from_index(f), options));
  return out;
}

std::vector<FunctionAnalysis> analyze_parallel(std::span<const FunctionIndex> functions, unsigned jobs,
                                               const MinimizerOptions& options) {
  const auto count = static_cast<std::int64_t>(functions.size());
  std::vector<FunctionAnalysis> out(functions.size());
  std::vector<std::exception_ptr> failures(functions.size());
  const int threads = static_cast<int>(effective_jobs(jobs));
  (void)threads;

#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = analyze_all(tt_from_index(functions[static_cast<std::size_t>(i)]), options);
    } catch (...) {
      failures[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }

  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return out;
}

Tally tally_serial(std::span<const SweepRecord> records, Criterion criterion) { return tally(records, criterion); }

Tally tally_parallel(std::span<const SweepRecord> records, Criterion criterion, unsigned jobs) {
  if (records.empty()) throw AnalysisError("empty record set");
  for (const auto& r : records)
    if (r.criterion != criterion) throw AnalysisError("record criterion mismatch");

  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(effective_jobs(jobs), records.size()));
  std::vector<Tally> partial(chunks);
  const auto chunk_count = static_cast<std::int64_t>(chunks);
  const int threads = static_cast<int>(effective_jobs(jobs));
  (void)threads;

#pragma omp parallel for schedule(static) num_threads(threads)
  for (std::int64_t c = 0; c < chunk_count; ++c) {
    const std::size_t begin = records.size() * static_cast<std::size_t>(c) / chunks;
    const std::size_t end = records.size() * static_cast<std::size_t>(c + 1) / chunks;
    Tally& t = partial[static_cast<std::size_t>(c)];
    t.criterion = criterion;
    for (std::size_t i = begin; i < end; ++i) t.add(records[i]);
  }

  Tally total;
  total.criterion = criterion;
  for (const auto& t : partial) total.merge(t);
  return total;
}

namespace {
std::vector<FunctionIndex> all_indices(unsigned n) {
  std::vector<FunctionIndex> idx;
  for (const auto& tt : enumerate_all(n)) idx.push_back(tt.index());
  return idx;
}
}  // namespace

SweepData sweep(unsigned n, unsigned jobs) {
  const auto idx = all_indices(n);
  return {n, false, 0, analyze_parallel(idx, jobs)};
}

SweepData sweep_serial(unsigned n) {
  const auto idx = all_indices(n);
  return {n, false, 0, analyze_serial(idx)};
}

SweepData sampled_sweep(unsigned n, std::uint64_t count, std::uint64_t seed, unsigned jobs) {
  check_vars(n, kMaxSweepVars);
  if (count > kMaxSampleCount)
    throw ResourceGuardError("sample count " + std::to_string(count) + " exceeds limit " +
                             std::to_string(kMaxSampleCount));
  const auto idx = sample_uniform(n, count, seed);
  return {n, true, seed, analyze_parallel(idx, jobs)};
}

}  // namespace bfforms
