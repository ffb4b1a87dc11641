#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rankmatch/events.hpp"
#include "rankmatch/graph.hpp"
#include "rankmatch/rational.hpp"

namespace rankmatch {

struct RatioEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Matched-node fraction over `samples` uniform permutations (denominator n:
// experiment graphs carry a perfect matching, so the maximum matching covers
// every node).  Deterministic: sample s draws from counter stream (seed, s),
// and per-sample statistics are folded in fixed 1024-sample blocks, so the
// result is bit-identical for every worker count.
RatioEstimate monte_carlo_ratio(const Graph& g, const PerfectMatching& m,
                                std::uint64_t samples, std::uint64_t seed,
                                int workers = 1);

// Exact matched-node fraction over all n! permutations.
Rational exact_ratio(const Graph& g, const PerfectMatching& m,
                     int cap = kDefaultEnumerationCap);

struct HardnessRow {
  int block = 0;  // family block size
  int k = 0;      // rounded eps * block
  int nodes = 0;
  RatioEstimate estimate;
};

// One Monte Carlo row per block size of the two-block hardness family.
std::vector<HardnessRow> hardness_table(double eps, std::span<const int> blocks,
                                        std::uint64_t samples,
                                        std::uint64_t seed, int workers = 1);

// CSV schema v1: one '#' metadata line, a header row, then data rows; numbers
// carry 7 significant digits.
std::string hardness_table_csv(double eps, std::uint64_t samples,
                               std::uint64_t seed,
                               std::span<const HardnessRow> rows);

std::string simulate_csv(const std::string& source, int nodes,
                         const RatioEstimate& est);

// RANKMATCH_WORKERS when set (clamped to at least 1), else 1.
int default_workers();

// %.7g rendering used by every CSV writer.
std::string format_sig7(double v);

}  // namespace rankmatch
