#include "rankmatch/events.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "rankmatch/kernels.hpp"

namespace rankmatch {

namespace {

using kernels::kKeyAbsent;

void require_cap(const Graph& g, int cap) {
  if (g.node_count() > cap)
    throw std::invalid_argument(
        "exhaustive enumeration rejected: " + std::to_string(g.node_count()) +
        " nodes exceeds cap " + std::to_string(cap));
}

std::vector<std::int32_t> sorted_nodes(int n) {
  std::vector<std::int32_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// node_at for the permutation with lexicographic index `idx` (factorial
// number system).
std::vector<std::int32_t> unrank_permutation(std::uint64_t idx, int n) {
  std::vector<std::int32_t> pool = sorted_nodes(n);
  std::vector<std::int32_t> out;
  out.reserve(n);
  for (int pos = n - 1; pos >= 0; --pos) {
    const std::uint64_t f = factorial(pos);
    const auto digit = static_cast<std::size_t>(idx / f);
    idx %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return out;
}

}  // namespace

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial: out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t permutation_index(const std::int32_t* node_at, int n) {
  std::uint64_t idx = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_right = 0;
    for (int j = i + 1; j < n; ++j) smaller_right += (node_at[j] < node_at[i]);
    idx += static_cast<std::uint64_t>(smaller_right) * factorial(n - 1 - i);
  }
  return idx;
}

void for_each_permutation(
    int n, const std::function<void(const std::int32_t*)>& fn) {
  std::vector<std::int32_t> node_at = sorted_nodes(n);
  do {
    fn(node_at.data());
  } while (std::next_permutation(node_at.begin(), node_at.end()));
}

bool instance_is_good(const Graph& g, const Permutation& sigma, int u) {
  return run_ranking(g, sigma).matched(u);
}

std::vector<char> insertion_goodness(const Graph& g, const Permutation& sigma,
                                     int u) {
  const int n = g.node_count();
  std::vector<std::int32_t> arr;
  arr.reserve(n);
  arr.push_back(u);
  for (const std::int32_t v : sigma.order())
    if (v != u) arr.push_back(v);

  std::vector<char> good(n, 0);
  RankingScratch scratch;
  for (int i = 1; i <= n; ++i) {
    // arr holds u at position i-1.
    run_ranking_fast(g, arr.data(), n, scratch);
    good[i - 1] = (scratch.key[u] == kKeyAbsent);
    if (i < n) std::swap(arr[i - 1], arr[i]);
  }
  return good;
}

std::optional<int> marginal_position(const Graph& g, const Permutation& sigma,
                                     int u) {
  const std::vector<char> good = insertion_goodness(g, sigma, u);
  for (int t = 2; t <= static_cast<int>(good.size()); ++t)
    if (!good[t - 1] && good[t - 2]) return t;
  return std::nullopt;
}

Rational EventTables::matched_probability(int t) const {
  return Rational(static_cast<std::int64_t>(matched_count[t]),
                  static_cast<std::int64_t>(total));
}

Rational EventTables::marginal_probability(int t) const {
  return Rational(static_cast<std::int64_t>(marginal_count[t]),
                  static_cast<std::int64_t>(total));
}

Rational EventTables::performance_ratio() const {
  std::uint64_t sum = 0;
  for (int t = 1; t <= n; ++t) sum += matched_count[t];
  return Rational(static_cast<std::int64_t>(sum),
                  static_cast<std::int64_t>(total) * n);
}

EventTables enumerate_event_tables_range(const Graph& g, std::uint64_t lo,
                                         std::uint64_t hi, int cap) {
  require_cap(g, cap);
  const int n = g.node_count();
  const std::uint64_t total = factorial(n);
  if (lo > hi || hi > total)
    throw std::invalid_argument("enumerate_event_tables_range: bad range");

  EventTables tables;
  tables.n = n;
  tables.total = total;
  tables.matched_count.assign(n + 1, 0);
  tables.unmatched_count.assign(n + 1, 0);
  tables.marginal_count.assign(n + 1, 0);

  std::vector<std::int32_t> node_at = unrank_permutation(lo, n);
  RankingScratch scratch, probe;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    run_ranking_fast(g, node_at.data(), n, scratch);
    for (int t = 1; t <= n; ++t) {
      const std::int32_t u = node_at[t - 1];
      if (scratch.key[u] == kKeyAbsent) {
        ++tables.matched_count[t];
        continue;
      }
      ++tables.unmatched_count[t];
      if (t >= 2) {
        // Move u one rank up (swap with its predecessor) and rerun.
        std::swap(node_at[t - 2], node_at[t - 1]);
        run_ranking_fast(g, node_at.data(), n, probe);
        if (probe.key[u] == kKeyAbsent) ++tables.marginal_count[t];
        std::swap(node_at[t - 2], node_at[t - 1]);
      }
    }
    std::next_permutation(node_at.begin(), node_at.end());
  }
  return tables;
}

EventTables enumerate_event_tables(const Graph& g, int cap) {
  require_cap(g, cap);
  return enumerate_event_tables_range(g, 0, factorial(g.node_count()), cap);
}

EventTables merge_tables(const EventTables& a, const EventTables& b) {
  if (a.n != b.n) throw std::invalid_argument("merge_tables: size mismatch");
  EventTables out = a;
  for (int t = 1; t <= a.n; ++t) {
    out.matched_count[t] += b.matched_count[t];
    out.unmatched_count[t] += b.unmatched_count[t];
    out.marginal_count[t] += b.marginal_count[t];
  }
  return out;
}

bool check_rank_partition(const EventTables& t) {
  for (int i = 1; i <= t.n; ++i)
    if (t.matched_count[i] + t.unmatched_count[i] != t.total) return false;
  return true;
}

bool check_first_rank_never_marginal(const EventTables& t) {
  return t.marginal_count[1] == 0;
}

bool check_marginal_decomposition(const EventTables& t) {
  std::uint64_t cumulative = 0;
  for (int i = 1; i <= t.n; ++i) {
    cumulative += t.marginal_count[i];
    if (t.unmatched_count[i] != cumulative) return false;
  }
  return true;
}

bool check_weighted_marginal_bound(const EventTables& t) {
  std::uint64_t weighted = 0;   // sum_{i<=t} (n-i+1) * s_i
  std::uint64_t matched = 0;    // sum_{i<=t-1} q_i
  for (int i = 2; i <= t.n; ++i) {
    weighted += static_cast<std::uint64_t>(t.n - i + 1) * t.marginal_count[i];
    matched += t.matched_count[i - 1];
    if (weighted > matched) return false;
  }
  return true;
}

bool check_matched_counts_monotone(const EventTables& t) {
  for (int i = 2; i <= t.n; ++i)
    if (t.matched_count[i - 1] < t.matched_count[i]) return false;
  return true;
}

// ---- Boundary relation -----------------------------------------------------

namespace {

// Rule application shared by boundary_image and the exhaustive verifier.
// `partner_rho` is the matching of the reinserted permutation rho, and
// `vo_from_sigma` is the partner (in the original run) of u's perfect
// partner, used when that perfect partner ends unmatched in rho.
// Calls emit(rule, x) exactly twice.
template <typename Emit>
void apply_boundary_rules(int u, int ustar,
                          const std::int32_t* partner_rho,
                          std::int32_t vo_from_sigma, const Emit& emit) {
  if (partner_rho[u] < 0) {
    emit(1, ustar);
    const std::int32_t v = partner_rho[ustar];
    if (v < 0)
      throw std::logic_error(
          "boundary rules: node and its perfect partner both unmatched");
    emit(2, v);
    return;
  }
  emit(3, u);
  const std::int32_t p = partner_rho[ustar];
  if (p == u) {
    emit(4, ustar);
  } else if (p >= 0) {
    emit(5, p);
  } else {
    if (vo_from_sigma < 0)
      throw std::logic_error(
          "boundary rules: perfect partner unmatched in the source run");
    emit(6, vo_from_sigma);
  }
}

}  // namespace

std::vector<BoundaryProduction> boundary_image(const Graph& g,
                                               const PerfectMatching& m,
                                               const Permutation& sigma,
                                               int u) {
  const int n = g.node_count();
  if (!validate_perfect_matching(g, m))
    throw std::invalid_argument("boundary_image: invalid perfect matching");
  if (sigma.rank_of(u) != n)
    throw std::invalid_argument(
        "boundary_image: node must hold the last rank");
  const MatchingOutcome full = run_ranking(g, sigma);
  if (full.matched(u))
    throw std::invalid_argument("boundary_image: instance is not bad");

  const int ustar = m.partner_of(u);
  const std::int32_t vo = full.partner[ustar];

  std::vector<BoundaryProduction> out;
  out.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    Permutation rho = sigma.remove_insert(u, i);
    const MatchingOutcome run = run_ranking(g, rho);
    apply_boundary_rules(u, ustar, run.partner.data(), vo,
                         [&](int rule, int x) {
                           if (!run.matched(x))
                             throw std::logic_error(
                                 "boundary_image: produced instance is bad");
                           out.push_back({rule, rho, x});
                         });
  }
  return out;
}

RelationReport verify_boundary_injectivity(const Graph& g,
                                           const PerfectMatching& m,
                                           int cap) {
  require_cap(g, cap);
  if (!validate_perfect_matching(g, m))
    throw std::invalid_argument(
        "verify_boundary_injectivity: invalid perfect matching");

  const int n = g.node_count();
  const std::uint64_t total = factorial(n);
  const std::uint64_t instance_count = total * static_cast<std::uint64_t>(n);

  RelationReport report;
  report.n = n;

  std::vector<std::uint32_t> preimage(instance_count, 0);
  // One bit per (rule, instance); detects a rule producing an instance twice.
  std::vector<std::uint64_t> rule_seen(
      (6 * instance_count + 63) / 64, 0);
  auto rule_mark = [&](int rule, std::uint64_t key) {
    const std::uint64_t bit =
        static_cast<std::uint64_t>(rule - 1) * instance_count + key;
    const std::uint64_t word = bit >> 6;
    const std::uint64_t mask = 1ull << (bit & 63);
    const bool seen = (rule_seen[word] & mask) != 0;
    rule_seen[word] |= mask;
    return seen;
  };

  std::vector<std::int32_t> node_at = sorted_nodes(n);
  std::vector<std::int32_t> arr(n);
  std::vector<std::int32_t> partner(n), partner_rho(n);
  RankingScratch scratch, scratch_rho;
  std::vector<std::uint64_t> local_keys;

  do {
    const int matched =
        run_ranking_fast(g, node_at.data(), n, scratch, partner.data());
    report.good_total += static_cast<std::uint64_t>(matched);

    const std::int32_t u = node_at[n - 1];
    if (partner[u] >= 0) continue;
    ++report.bad_count;

    const int ustar = m.partner_of(u);
    const std::int32_t vo = partner[ustar];

    arr = node_at;
    local_keys.clear();
    int productions = 0;
    for (int i = n; i >= 1; --i) {
      // arr holds u at position i-1 (it starts at rank n and bubbles up).
      run_ranking_fast(g, arr.data(), n, scratch_rho, partner_rho.data());
      const std::uint64_t rho_index = permutation_index(arr.data(), n);
      apply_boundary_rules(
          u, ustar, partner_rho.data(), vo, [&](int rule, int x) {
            ++productions;
            if (partner_rho[x] < 0) report.images_all_good = false;
            const std::uint64_t key =
                rho_index * static_cast<std::uint64_t>(n) +
                static_cast<std::uint64_t>(x);
            if (rule_mark(rule, key)) report.per_rule_injective = false;
            local_keys.push_back(key);
          });
      if (i > 1) std::swap(arr[i - 1], arr[i - 2]);
    }

    if (productions != 2 * n) report.images_all_size_2n = false;
    std::sort(local_keys.begin(), local_keys.end());
    for (std::size_t j = 0; j < local_keys.size(); ++j) {
      if (j > 0 && local_keys[j] == local_keys[j - 1]) {
        report.images_distinct_per_source = false;
        continue;  // count each produced instance once per source
      }
      ++preimage[local_keys[j]];
    }
  } while (std::next_permutation(node_at.begin(), node_at.end()));

  for (const std::uint32_t c : preimage) {
    if (c > report.max_preimage) report.max_preimage = c;
    if (report.preimage_histogram.size() <= c)
      report.preimage_histogram.resize(c + 1, 0);
    ++report.preimage_histogram[c];
  }
  report.count_bound_holds =
      2 * static_cast<std::uint64_t>(n) * report.bad_count <=
      3 * report.good_total;
  return report;
}

// ---- Exhaustive structural checks ------------------------------------------

bool check_engines_agree(const Graph& g, int cap) {
  require_cap(g, cap);
  bool ok = true;
  for_each_permutation(g.node_count(), [&](const std::int32_t* node_at) {
    if (!ok) return;
    const std::vector<std::int32_t> order(node_at, node_at + g.node_count());
    const Permutation sigma = Permutation::from_node_order(order);
    if (run_ranking(g, sigma) != run_probe(g, lex_probe_list(sigma)))
      ok = false;
  });
  return ok;
}

bool check_maximality(const Graph& g, int cap) {
  require_cap(g, cap);
  const int n = g.node_count();
  bool ok = true;
  RankingScratch scratch;
  for_each_permutation(n, [&](const std::int32_t* node_at) {
    if (!ok) return;
    run_ranking_fast(g, node_at, n, scratch);
    for (int u = 0; u < n && ok; ++u) {
      if (scratch.key[u] == kKeyAbsent) continue;
      for (const std::int32_t v : g.neighbors(u))
        if (scratch.key[v] != kKeyAbsent) {
          ok = false;
          break;
        }
    }
  });
  return ok;
}

bool check_greedy_property(const Graph& g, int cap) {
  require_cap(g, cap);
  const int n = g.node_count();
  bool ok = true;
  RankingScratch scratch;
  std::vector<std::int32_t> partner(n), rank(n);
  for_each_permutation(n, [&](const std::int32_t* node_at) {
    if (!ok) return;
    run_ranking_fast(g, node_at, n, scratch, partner.data());
    for (int r = 0; r < n; ++r) rank[node_at[r]] = r + 1;
    for (int u = 0; u < n && ok; ++u) {
      if (partner[u] >= 0) continue;
      for (const std::int32_t w : g.neighbors(u)) {
        const std::int32_t v = partner[w];
        if (v < 0 || rank[v] >= rank[u]) {
          ok = false;
          break;
        }
      }
    }
  });
  return ok;
}

bool check_promotion_paths(const Graph& g, int cap) {
  require_cap(g, cap);
  const int n = g.node_count();
  bool ok = true;
  RankingScratch scratch;
  MatchingOutcome full, promoted;
  full.partner.resize(n);
  promoted.partner.resize(n);
  std::vector<std::int32_t> arr(n);
  for_each_permutation(n, [&](const std::int32_t* node_at) {
    if (!ok) return;
    run_ranking_fast(g, node_at, n, scratch, full.partner.data());
    for (int r = 0; r < n && ok; ++r) {
      const std::int32_t u = node_at[r];
      if (full.partner[u] >= 0) continue;  // only bad instances promote
      // Bubble u from its rank to rank 1, rerunning at each insertion rank.
      arr.assign(node_at, node_at + n);
      for (int i = r; i >= 0 && ok; --i) {
        if (i < r) std::swap(arr[i], arr[i + 1]);
        if (i == r) continue;  // that is sigma itself
        run_ranking_fast(g, arr.data(), n, scratch, promoted.partner.data());
        if (promoted.partner[u] < 0) continue;
        try {
          const std::vector<int> path =
              symmetric_difference_path(g, full, promoted, u);
          if (path.size() < 2 || path.front() != u) ok = false;
        } catch (const std::logic_error&) {
          ok = false;
        }
      }
    }
  });
  return ok;
}

bool check_removal_paths(const Graph& g, int cap) {
  require_cap(g, cap);
  const int n = g.node_count();
  bool ok = true;
  for_each_permutation(n, [&](const std::int32_t* node_at) {
    if (!ok) return;
    const Permutation sigma = Permutation::from_node_order(
        std::vector<std::int32_t>(node_at, node_at + n));
    const ProbeList list = lex_probe_list(sigma);
    for (int u = 0; u < n && ok; ++u) {
      try {
        (void)removal_path(g, list, u);
      } catch (const std::logic_error&) {
        ok = false;
      }
    }
  });
  return ok;
}

bool check_marginal_threshold(const Graph& g, int cap) {
  require_cap(g, cap);
  const int n = g.node_count();
  bool ok = true;
  for_each_permutation(n, [&](const std::int32_t* node_at) {
    if (!ok) return;
    const Permutation sigma = Permutation::from_node_order(
        std::vector<std::int32_t>(node_at, node_at + n));
    const MatchingOutcome full = run_ranking(g, sigma);
    for (int u = 0; u < n && ok; ++u) {
      const std::vector<char> good = insertion_goodness(g, sigma, u);
      // Goodness over the insertion rank must be a prefix of goods followed
      // by bads, and must agree with sigma itself at u's own rank.
      for (int i = 1; i < n; ++i)
        if (good[i] && !good[i - 1]) ok = false;
      if (good[sigma.rank_of(u) - 1] != full.matched(u)) ok = false;
      if (!full.matched(u) && good[0]) {
        const std::optional<int> mp = marginal_position(g, sigma, u);
        if (!mp.has_value() || *mp > sigma.rank_of(u)) ok = false;
      }
    }
  });
  return ok;
}

}  // namespace rankmatch
