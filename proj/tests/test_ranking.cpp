#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rankmatch/events.hpp"
#include "rankmatch/graph.hpp"
#include "rankmatch/ranking.hpp"
#include "rankmatch/rng.hpp"

using namespace rankmatch;

namespace {

Permutation perm(std::vector<std::int32_t> order) {
  return Permutation::from_node_order(std::move(order));
}

}  // namespace

TEST_CASE("probe order follows the rank-lexicographic rule") {
  const Permutation sigma = perm({0, 1, 2});
  const ProbeList list = lex_probe_list(sigma);
  const ProbeList expect = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(list == expect);

  CHECK(lex_probe_list(perm({0, 1})) == ProbeList{{0, 1}});

  const ProbeList four = lex_probe_list(perm({0, 1, 2, 3}));
  const ProbeList expect4 = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(four == expect4);

  // Non-identity ranks reorder the pairs accordingly.
  const ProbeList shuffled = lex_probe_list(perm({2, 0, 1}));
  const ProbeList expect_shuffled = {{2, 0}, {2, 1}, {0, 1}};
  CHECK(shuffled == expect_shuffled);
}

TEST_CASE("pair-list probing matches greedily") {
  const Graph single = Graph::from_edges(2, {{0, 1}});
  const MatchingOutcome both = run_probe(single, {{0, 1}});
  CHECK(both.matched(0));
  CHECK(both.matched(1));

  // Probing the middle edge of the path first starves the endpoints.
  const Graph p4 = path_graph(4);
  const MatchingOutcome mid = run_probe(p4, lex_probe_list(perm({1, 2, 0, 3})));
  CHECK(mid.partner[1] == 2);
  CHECK_FALSE(mid.matched(0));
  CHECK_FALSE(mid.matched(3));

  CHECK(run_probe(p4, {}).matched_count() == 0);
}

TEST_CASE("rank-sequential engine examples") {
  const Graph k4 = complete_graph(4);
  for_each_permutation(4, [&](const std::int32_t* node_at) {
    const Permutation sigma =
        perm(std::vector<std::int32_t>(node_at, node_at + 4));
    CHECK(run_ranking(k4, sigma).matched_count() == 4);
  });

  const Graph p4 = path_graph(4);
  const MatchingOutcome out = run_ranking(p4, perm({1, 2, 0, 3}));
  CHECK(out.partner[1] == 2);
  CHECK(out.matched_count() == 2);

  const Graph single = Graph::from_edges(2, {{0, 1}});
  CHECK(run_ranking(single, perm({0, 1})).matched_count() == 2);
  CHECK(run_ranking(single, perm({1, 0})).matched_count() == 2);
}

TEST_CASE("engines agree exhaustively on small graphs") {
  CHECK(check_engines_agree(path_graph(4)));
  CHECK(check_engines_agree(path_graph(6)));
  CHECK(check_engines_agree(cycle_graph(6)));
  CHECK(check_engines_agree(complete_graph(6)));
  CHECK(check_engines_agree(complete_bipartite(3, 3)));
}

TEST_CASE("engines agree on random larger instances") {
  PhiloxRng rng(31337, 0);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = random_graph(24, 0.05 + 0.4 * (trial % 5) / 4.0,
                                 9000 + trial);
    std::vector<std::int32_t> order(24);
    for (int i = 0; i < 24; ++i) order[i] = i;
    fisher_yates(order, rng);
    const Permutation sigma = perm(order);
    CHECK(run_ranking(g, sigma) == run_probe(g, lex_probe_list(sigma)));
  }
}

TEST_CASE("every run is maximal") {
  PhiloxRng rng(4, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = random_graph(16, 0.3, 40 + trial);
    std::vector<std::int32_t> order(16);
    for (int i = 0; i < 16; ++i) order[i] = i;
    fisher_yates(order, rng);
    CHECK(is_maximal_matching(g, run_ranking(g, perm(order))));
  }
}

TEST_CASE("rank-1 node with a neighbor is always matched") {
  PhiloxRng rng(6, 0);
  for (int trial = 0; trial < 100; ++trial) {
    auto [g, m] = random_perfect_matching_graph(8, 0.3, 700 + trial);
    std::vector<std::int32_t> order(8);
    for (int i = 0; i < 8; ++i) order[i] = i;
    fisher_yates(order, rng);
    const MatchingOutcome out = run_ranking(g, perm(order));
    CHECK(out.matched(order[0]));
  }

  // An isolated node stays unmatched even at rank 1.
  const Graph iso = Graph::from_edges(3, {{1, 2}});
  const MatchingOutcome out = run_ranking(iso, perm({0, 1, 2}));
  CHECK_FALSE(out.matched(0));
  CHECK(out.matched(1));
}

TEST_CASE("remove_node filters every occurrence") {
  const ProbeList list = {{0, 1}, {0, 2}, {1, 2}};
  CHECK(remove_node(list, 0) == ProbeList{{1, 2}});
  CHECK(remove_node(list, 3) == list);
  CHECK(remove_node(ProbeList{{0, 1}}, 1).empty());
}

TEST_CASE("removal path examples") {
  const Graph single = Graph::from_edges(2, {{0, 1}});
  const AlternatingPathReport r1 = removal_path(single, {{0, 1}}, 0);
  CHECK(r1.removed_node_matched);
  CHECK(r1.path == std::vector<int>{0, 1});

  // Isolated node: removing it changes nothing.
  const Graph iso = Graph::from_edges(3, {{1, 2}});
  const AlternatingPathReport r2 =
      removal_path(iso, {{0, 1}, {1, 2}, {0, 2}}, 0);
  CHECK_FALSE(r2.removed_node_matched);
  CHECK(r2.path.empty());

  const Graph p4 = path_graph(4);
  const AlternatingPathReport r3 =
      removal_path(p4, lex_probe_list(perm({0, 1, 2, 3})), 0);
  CHECK(r3.removed_node_matched);
  CHECK(r3.path == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("removal path on arbitrary pair lists, exhaustively checked") {
  CHECK(check_removal_paths(path_graph(4)));
  CHECK(check_removal_paths(cycle_graph(4)));
  CHECK(check_removal_paths(complete_graph(4)));

  // Arbitrary (non rank-induced) probe orders satisfy the same contract.
  PhiloxRng rng(8, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng.uniform_below(4));
    const Graph g = random_graph(n, 0.45, 313 + trial);
    ProbeList list;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.uniform_below(4) != 0) list.emplace_back(u, v);
    for (std::size_t i = list.size(); i > 1; --i)
      std::swap(list[i - 1], list[rng.uniform_below(static_cast<std::uint32_t>(i))]);
    for (int u = 0; u < n; ++u) {
      const AlternatingPathReport rep = removal_path(g, list, u);
      CHECK(rep.removed_node_matched == !rep.path.empty());
      if (!rep.path.empty()) CHECK(rep.path.front() == u);
    }
  }
}

TEST_CASE("greedy property holds exhaustively") {
  CHECK(check_greedy_property(path_graph(6)));
  CHECK(check_greedy_property(cycle_graph(6)));
  CHECK(check_greedy_property(complete_bipartite(3, 3)));
}

TEST_CASE("the path checker rejects non-path differences") {
  // Two perfect matchings of the 4-cycle differ by the whole cycle; that
  // must be reported as a structural violation, not silently accepted.
  const Graph c4 = cycle_graph(4);
  MatchingOutcome m1, m2;
  m1.partner = {1, 0, 3, 2};
  m2.partner = {3, 2, 1, 0};
  CHECK_THROWS_AS(symmetric_difference_path(c4, m1, m2, 0), std::logic_error);

  // Two disjoint difference edges form two components.
  const Graph pairs = Graph::from_edges(4, {{0, 1}, {2, 3}});
  MatchingOutcome full, empty;
  full.partner = {1, 0, 3, 2};
  empty.partner = {-1, -1, -1, -1};
  CHECK_THROWS_AS(symmetric_difference_path(pairs, full, empty, 0),
                  std::logic_error);

  // A nonempty difference that does not touch the claimed endpoint.
  MatchingOutcome right_only;
  right_only.partner = {-1, -1, 3, 2};
  CHECK_THROWS_AS(symmetric_difference_path(pairs, right_only, empty, 0),
                  std::logic_error);

  // Sane inputs still walk fine.
  const std::vector<int> ok =
      symmetric_difference_path(pairs, right_only, empty, 2);
  CHECK(ok == std::vector<int>{2, 3});
}
