#include "rankmatch/harness.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "rankmatch/ranking.hpp"
#include "rankmatch/rng.hpp"

namespace rankmatch {

namespace {

constexpr std::uint64_t kBlock = 1024;

struct BlockStat {
  std::uint64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;
};

// Matched fraction of one sampled permutation.
double one_sample(const Graph& g, std::uint64_t seed, std::uint64_t index,
                  std::vector<std::int32_t>& node_at, RankingScratch& scratch) {
  PhiloxRng rng(seed, index);
  const int n = g.node_count();
  node_at.resize(n);
  std::iota(node_at.begin(), node_at.end(), 0);
  fisher_yates(node_at, rng);
  const int matched = run_ranking_fast(g, node_at.data(), n, scratch);
  return static_cast<double>(matched) / n;
}

}  // namespace

RatioEstimate monte_carlo_ratio(const Graph& g, const PerfectMatching& m,
                                std::uint64_t samples, std::uint64_t seed,
                                int workers) {
  if (samples < 1)
    throw std::invalid_argument("monte_carlo_ratio: need at least one sample");
  const std::string why = perfect_matching_violation(g, m);
  if (!why.empty())
    throw std::invalid_argument("monte_carlo_ratio: " + why);
  workers = std::max(1, workers);

  const std::uint64_t blocks = (samples + kBlock - 1) / kBlock;
  std::vector<BlockStat> stats(blocks);

  // Blocks are assigned round-robin and each is processed in sample order,
  // so the block statistics do not depend on the worker count.
  auto run_blocks = [&](int worker) {
    std::vector<std::int32_t> node_at;
    RankingScratch scratch;
    for (std::uint64_t b = worker; b < blocks; b += workers) {
      BlockStat s;
      const std::uint64_t lo = b * kBlock;
      const std::uint64_t hi = std::min(samples, lo + kBlock);
      for (std::uint64_t i = lo; i < hi; ++i) {
        const double x = one_sample(g, seed, i, node_at, scratch);
        ++s.count;
        const double delta = x - s.mean;
        s.mean += delta / static_cast<double>(s.count);
        s.m2 += delta * (x - s.mean);
      }
      stats[b] = s;
    }
  };

  if (workers == 1) {
    run_blocks(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(run_blocks, w);
    for (std::thread& t : pool) t.join();
  }

  // Fold blocks in index order (pairwise two-group merge).
  BlockStat total;
  for (const BlockStat& s : stats) {
    if (s.count == 0) continue;
    if (total.count == 0) {
      total = s;
      continue;
    }
    const double delta = s.mean - total.mean;
    const std::uint64_t na = total.count, nb = s.count;
    const double nsum = static_cast<double>(na + nb);
    total.mean += delta * (static_cast<double>(nb) / nsum);
    total.m2 += s.m2 + delta * delta *
                           (static_cast<double>(na) *
                            static_cast<double>(nb) / nsum);
    total.count = na + nb;
  }

  RatioEstimate est;
  est.mean = total.mean;
  est.samples = samples;
  est.seed = seed;
  est.std_error =
      samples > 1
          ? std::sqrt(total.m2 / static_cast<double>(samples - 1) /
                      static_cast<double>(samples))
          : 0.0;
  return est;
}

Rational exact_ratio(const Graph& g, const PerfectMatching& m, int cap) {
  const std::string why = perfect_matching_violation(g, m);
  if (!why.empty()) throw std::invalid_argument("exact_ratio: " + why);
  return enumerate_event_tables(g, cap).performance_ratio();
}

std::vector<HardnessRow> hardness_table(double eps, std::span<const int> blocks,
                                        std::uint64_t samples,
                                        std::uint64_t seed, int workers) {
  std::vector<HardnessRow> rows;
  rows.reserve(blocks.size());
  for (const int block : blocks) {
    auto [g, m] = double_bomb(block, eps);
    HardnessRow row;
    row.block = block;
    row.k = double_bomb_k(block, eps);
    row.nodes = g.node_count();
    row.estimate = monte_carlo_ratio(g, m, samples, seed, workers);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_sig7(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

std::string hardness_table_csv(double eps, std::uint64_t samples,
                               std::uint64_t seed,
                               std::span<const HardnessRow> rows) {
  std::string out = "# rankmatch csv v1 command=hardness-table eps=" +
                    format_sig7(eps) + " samples=" + std::to_string(samples) +
                    " seed=" + std::to_string(seed) + "\n";
  out += "n,k,nodes,samples,mean,stderr\n";
  for (const HardnessRow& r : rows) {
    out += std::to_string(r.block) + "," + std::to_string(r.k) + "," +
           std::to_string(r.nodes) + "," +
           std::to_string(r.estimate.samples) + "," +
           format_sig7(r.estimate.mean) + "," +
           format_sig7(r.estimate.std_error) + "\n";
  }
  return out;
}

std::string simulate_csv(const std::string& source, int nodes,
                         const RatioEstimate& est) {
  std::string out = "# rankmatch csv v1 command=simulate source=" + source +
                    " seed=" + std::to_string(est.seed) + "\n";
  out += "nodes,samples,mean,stderr\n";
  out += std::to_string(nodes) + "," + std::to_string(est.samples) + "," +
         format_sig7(est.mean) + "," + format_sig7(est.std_error) + "\n";
  return out;
}

int default_workers() {
  const char* env = std::getenv("RANKMATCH_WORKERS");
  if (env == nullptr) return 1;
  const int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

}  // namespace rankmatch
