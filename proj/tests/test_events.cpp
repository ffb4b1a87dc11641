#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "rankmatch/events.hpp"
#include "rankmatch/graph.hpp"
#include "rankmatch/ranking.hpp"

using namespace rankmatch;

namespace {

Permutation perm(std::vector<std::int32_t> order) {
  return Permutation::from_node_order(std::move(order));
}

// Independent oracle: counts built from the pair-list reference engine and
// explicit permutation objects, no shared code with the enumeration path.
EventTables brute_force_tables(const Graph& g) {
  const int n = g.node_count();
  EventTables t;
  t.n = n;
  t.total = factorial(n);
  t.matched_count.assign(n + 1, 0);
  t.unmatched_count.assign(n + 1, 0);
  t.marginal_count.assign(n + 1, 0);
  for_each_permutation(n, [&](const std::int32_t* node_at) {
    const Permutation sigma =
        perm(std::vector<std::int32_t>(node_at, node_at + n));
    const MatchingOutcome out = run_probe(g, lex_probe_list(sigma));
    for (int rank = 1; rank <= n; ++rank) {
      const int u = sigma.node_at(rank);
      if (out.matched(u)) {
        ++t.matched_count[rank];
        continue;
      }
      ++t.unmatched_count[rank];
      if (rank >= 2) {
        const Permutation up = sigma.remove_insert(u, rank - 1);
        if (run_probe(g, lex_probe_list(up)).matched(u))
          ++t.marginal_count[rank];
      }
    }
  });
  return t;
}

bool tables_equal(const EventTables& a, const EventTables& b) {
  return a.n == b.n && a.total == b.total &&
         a.matched_count == b.matched_count &&
         a.unmatched_count == b.unmatched_count &&
         a.marginal_count == b.marginal_count;
}

}  // namespace

TEST_CASE("classification examples") {
  const Graph single = Graph::from_edges(2, {{0, 1}});
  CHECK(instance_is_good(single, perm({0, 1}), 0));
  CHECK(instance_is_good(single, perm({1, 0}), 0));

  const Graph p4 = path_graph(4);
  CHECK_FALSE(instance_is_good(p4, perm({1, 2, 0, 3}), 0));

  // The rank-1 node of a perfect-matching graph is always good.
  for_each_permutation(4, [&](const std::int32_t* node_at) {
    const Permutation sigma =
        perm(std::vector<std::int32_t>(node_at, node_at + 4));
    CHECK(instance_is_good(p4, sigma, sigma.node_at(1)));
  });
}

TEST_CASE("marginal position examples") {
  const Graph single = Graph::from_edges(2, {{0, 1}});
  CHECK_FALSE(marginal_position(single, perm({0, 1}), 0).has_value());

  // Hand-walked instance: bad at insertion ranks 3 and 4, good at 1 and 2.
  const Graph p4 = path_graph(4);
  const Permutation sigma = perm({1, 2, 0, 3});
  const std::vector<char> good = insertion_goodness(p4, sigma, 0);
  CHECK(good == std::vector<char>{1, 1, 0, 0});
  const auto mp = marginal_position(p4, sigma, 0);
  REQUIRE(mp.has_value());
  CHECK(*mp == 3);
}

TEST_CASE("bad instances stay bad past their marginal position") {
  CHECK(check_marginal_threshold(path_graph(4)));
  CHECK(check_marginal_threshold(path_graph(6)));
  CHECK(check_marginal_threshold(cycle_graph(6)));
  CHECK(check_marginal_threshold(complete_bipartite(3, 3)));
}

TEST_CASE("single edge tables") {
  const Graph single = Graph::from_edges(2, {{0, 1}});
  const EventTables t = enumerate_event_tables(single);
  CHECK(t.total == 2);
  CHECK(t.matched_count[1] == 2);
  CHECK(t.matched_count[2] == 2);
  CHECK(t.unmatched_count[1] == 0);
  CHECK(t.unmatched_count[2] == 0);
  CHECK(t.marginal_count[1] == 0);
  CHECK(t.marginal_count[2] == 0);
  CHECK(t.performance_ratio() == Rational(1));
}

TEST_CASE("four-node path tables match the hand count") {
  // Out of 24 orderings, exactly 6 probe the middle edge first (the two
  // middle nodes hold rank 1 and the lower of the outer ranks beats the
  // opposite end); those leave both endpoints unmatched.
  const EventTables t = enumerate_event_tables(path_graph(4));
  CHECK(t.matched_count == std::vector<std::uint64_t>{0, 24, 22, 20, 18});
  CHECK(t.unmatched_count == std::vector<std::uint64_t>{0, 0, 2, 4, 6});
  CHECK(t.marginal_count == std::vector<std::uint64_t>{0, 0, 2, 2, 2});
  CHECK(t.performance_ratio() == Rational(7, 8));
  CHECK(t.matched_probability(1) == Rational(1));
  CHECK(t.marginal_probability(1) == Rational(0));
  CHECK(t.marginal_probability(2) == Rational(1, 12));
}

TEST_CASE("enumeration agrees with the pair-list oracle") {
  for (const Graph& g : {path_graph(4), cycle_graph(4), complete_graph(4),
                         path_graph(5), random_graph(5, 0.5, 321)}) {
    CHECK(tables_equal(enumerate_event_tables(g), brute_force_tables(g)));
  }
}

TEST_CASE("range enumeration merges to the full tables") {
  const Graph g = path_graph(5);
  const std::uint64_t total = factorial(5);
  const EventTables full = enumerate_event_tables(g);
  const EventTables left = enumerate_event_tables_range(g, 0, total / 3);
  const EventTables right = enumerate_event_tables_range(g, total / 3, total);
  CHECK(tables_equal(full, merge_tables(left, right)));
}

TEST_CASE("count identities on perfect-matching graphs") {
  for (const Graph& g :
       {path_graph(4), path_graph(6), cycle_graph(6), complete_graph(6),
        complete_bipartite(3, 3)}) {
    const EventTables t = enumerate_event_tables(g);
    CHECK(check_rank_partition(t));
    CHECK(check_first_rank_never_marginal(t));
    CHECK(check_marginal_decomposition(t));
    CHECK(check_weighted_marginal_bound(t));
    CHECK(check_matched_counts_monotone(t));
    CHECK(t.matched_probability(1) == Rational(1));
  }
}

TEST_CASE("corrupted tables are rejected") {
  EventTables t = enumerate_event_tables(path_graph(4));
  ++t.marginal_count[2];
  CHECK_FALSE(check_marginal_decomposition(t));

  EventTables t2 = enumerate_event_tables(path_graph(4));
  t2.marginal_count[2] = 100;  // force the weighted bound to fail
  CHECK_FALSE(check_weighted_marginal_bound(t2));

  EventTables t3 = enumerate_event_tables(path_graph(4));
  ++t3.matched_count[3];
  CHECK_FALSE(check_rank_partition(t3));
}

TEST_CASE("enumeration cap guards cost") {
  CHECK_THROWS_AS(enumerate_event_tables(complete_graph(9), 8),
                  std::invalid_argument);
  CHECK_NOTHROW(enumerate_event_tables(complete_graph(4), 4));
}

TEST_CASE("promotion difference paths are single alternating paths") {
  CHECK(check_promotion_paths(path_graph(4)));
  CHECK(check_promotion_paths(path_graph(6)));
  CHECK(check_promotion_paths(cycle_graph(6)));
  CHECK(check_promotion_paths(complete_bipartite(3, 3)));
}
