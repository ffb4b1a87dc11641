#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rankmatch/graph.hpp"
#include "rankmatch/permutation.hpp"
#include "rankmatch/ranking.hpp"
#include "rankmatch/rational.hpp"

namespace rankmatch {

// Default bound on exhaustive enumeration (n! * n Ranking runs).
inline constexpr int kDefaultEnumerationCap = 8;

// An instance is a (permutation, node) pair; it is good when the node ends
// the run matched.
bool instance_is_good(const Graph& g, const Permutation& sigma, int u);

// Matched status of u when it is reinserted at each rank i = 1..n (index
// i-1), all other nodes keeping their relative order.
std::vector<char> insertion_goodness(const Graph& g, const Permutation& sigma,
                                     int u);

// The unique rank t in [2..n] where reinserting u at t leaves it unmatched
// but reinserting at t-1 leaves it matched; nullopt when no such rank exists
// (in particular when u is matched at every insertion rank).
std::optional<int> marginal_position(const Graph& g, const Permutation& sigma,
                                     int u);

// Exact counts over all n! permutations.  For each rank t in 1..n,
// matched_count[t] and unmatched_count[t] partition the permutations by the
// matched status of the rank-t node; marginal_count[t] counts permutations
// whose rank-t node is unmatched there but becomes matched when moved up to
// rank t-1.
struct EventTables {
  int n = 0;
  std::uint64_t total = 0;  // n!
  std::vector<std::uint64_t> matched_count;    // index 1..n (q)
  std::vector<std::uint64_t> unmatched_count;  // index 1..n (r)
  std::vector<std::uint64_t> marginal_count;   // index 1..n (s)

  Rational matched_probability(int t) const;   // x_t
  Rational marginal_probability(int t) const;  // alpha_t
  Rational performance_ratio() const;          // sum_t x_t / n
};

// Exhaustive enumeration.  Throws when g has more nodes than `cap`.
EventTables enumerate_event_tables(const Graph& g,
                                   int cap = kDefaultEnumerationCap);

// Enumeration restricted to permutations with index in [lo, hi) in
// lexicographic order of the node sequence; two tables over complementary
// ranges merge additively to the full tables.
EventTables enumerate_event_tables_range(const Graph& g, std::uint64_t lo,
                                         std::uint64_t hi,
                                         int cap = kDefaultEnumerationCap);
EventTables merge_tables(const EventTables& a, const EventTables& b);

// ---- Exact identities the tables must satisfy -----------------------------

// matched + unmatched at every rank partition all n! permutations.
bool check_rank_partition(const EventTables& t);

// No permutation is marginal at rank 1.
bool check_first_rank_never_marginal(const EventTables& t);

// unmatched_count[t] == sum_{i<=t} marginal_count[i] for every t.
bool check_marginal_decomposition(const EventTables& t);

// sum_{i<=t} (n-i+1) * marginal_count[i] <= sum_{i<=t-1} matched_count[i]
// for every t in [2..n].
bool check_weighted_marginal_bound(const EventTables& t);

// matched_count never increases with the rank.
bool check_matched_counts_monotone(const EventTables& t);

// ---- Boundary relation -----------------------------------------------------

// One production of the boundary relation: applying `rule` (1..6) to a bad
// instance whose node sits at the last rank yields the good instance
// (rho, node).
struct BoundaryProduction {
  int rule;
  Permutation rho;
  int node;
};

// Applies the production rules to a bad instance (sigma, u) with u at rank
// n, yielding exactly two good instances per insertion rank (2n in total).
// Throws std::invalid_argument when u is not the rank-n node or is matched,
// and std::logic_error if a produced instance fails to be good.
std::vector<BoundaryProduction> boundary_image(const Graph& g,
                                               const PerfectMatching& m,
                                               const Permutation& sigma,
                                               int u);

// Aggregate result of enumerating the boundary relation over every bad
// instance with its node at the last rank.
struct RelationReport {
  int n = 0;
  std::uint64_t bad_count = 0;        // instances related (|R_n|)
  std::uint64_t good_total = 0;       // good instances over all ranks
  std::uint64_t max_preimage = 0;     // worst-case producers of one instance
  bool images_all_size_2n = true;
  bool images_all_good = true;
  bool images_distinct_per_source = true;
  bool per_rule_injective = true;     // no rule produces one instance twice
  bool count_bound_holds = true;      // 2n * bad_count <= 3 * good_total
  std::vector<std::uint64_t> preimage_histogram;  // index = preimage size
};

RelationReport verify_boundary_injectivity(const Graph& g,
                                           const PerfectMatching& m,
                                           int cap = kDefaultEnumerationCap);

// ---- Exhaustive structural checks over all permutations --------------------

// Both probing engines produce identical matchings for every permutation.
bool check_engines_agree(const Graph& g, int cap = kDefaultEnumerationCap);

// Every run's matching is maximal.
bool check_maximality(const Graph& g, int cap = kDefaultEnumerationCap);

// Greedy property: whenever u ends unmatched, each of its neighbors is
// matched to a node of smaller rank than u's.
bool check_greedy_property(const Graph& g, int cap = kDefaultEnumerationCap);

// Whenever u is unmatched under sigma but matched when reinserted at rank i,
// the two matchings differ by a single alternating path starting at u.
bool check_promotion_paths(const Graph& g, int cap = kDefaultEnumerationCap);

// removal_path succeeds for every (permutation, node) pair, and the path is
// nonempty exactly when the node was matched.
bool check_removal_paths(const Graph& g, int cap = kDefaultEnumerationCap);

// Whenever an instance is bad, its marginal position exists, is at most the
// node's rank, and reinserting at or below it stays bad (goodness over the
// insertion rank is a monotone threshold).
bool check_marginal_threshold(const Graph& g,
                              int cap = kDefaultEnumerationCap);

// ---- Shared enumeration helper ---------------------------------------------

// Calls fn(node_at) for every permutation of [0..n) in lexicographic order;
// node_at[r] is the node at rank r+1.
void for_each_permutation(int n,
                          const std::function<void(const std::int32_t*)>& fn);

// Lexicographic index of a node sequence among all n! orderings.
std::uint64_t permutation_index(const std::int32_t* node_at, int n);

std::uint64_t factorial(int n);

}  // namespace rankmatch
