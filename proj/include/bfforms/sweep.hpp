#pragma once

/// \file sweep.hpp
/// Function-space sweeps. Each kernel comes in two builds: a plain serial
/// loop kept as the reference, and an OpenMP loop over the same index list.
/// Both write result i into slot i, so their outputs are identical for any
/// thread count; tests and the benchmark compare them directly.

#include <cstdint>
#include <span>
#include <vector>

#include "bfforms/analysis.hpp"

namespace bfforms {

/// Largest sample accepted by sampled_sweep.
inline constexpr std::uint64_t kMaxSampleCount = std::uint64_t{1} << 24;

class ResourceGuardError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SweepData {
  unsigned n = 0;
  bool sampled = false;
  std::uint64_t seed = 0;
  std::vector<FunctionAnalysis> functions;  ///< index order, or draw order when sampled

  std::vector<SweepRecord> records(Criterion criterion) const;
};

std::vector<FunctionAnalysis> analyze_serial(std::span<const FunctionIndex> functions,
                                             const MinimizerOptions& options = MinimizerOptions::from_environment());
/// `jobs` = 0 uses the OpenMP default thread count. Minimizer guard failures
/// are rethrown after the loop, reporting the lowest failing slot.
std::vector<FunctionAnalysis> analyze_parallel(std::span<const FunctionIndex> functions, unsigned jobs,
                                               const MinimizerOptions& options = MinimizerOptions::from_environment());

Tally tally_serial(std::span<const SweepRecord> records, Criterion criterion);
/// Per-thread partial tallies over contiguous chunks, merged in chunk order.
Tally tally_parallel(std::span<const SweepRecord> records, Criterion criterion, unsigned jobs);

/// Every function of L(n), n in 1..4.
SweepData sweep(unsigned n, unsigned jobs);
SweepData sweep_serial(unsigned n);
/// `count` i.i.d. uniform draws from sample_uniform(n, count, seed), n <= 5.
SweepData sampled_sweep(unsigned n, std::uint64_t count, std::uint64_t seed, unsigned jobs);

/// Number of threads OpenMP would use for `jobs` (1 without OpenMP).
unsigned effective_jobs(unsigned jobs);

}  // namespace bfforms
