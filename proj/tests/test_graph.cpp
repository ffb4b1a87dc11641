#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "rankmatch/graph.hpp"
#include "rankmatch/rng.hpp"

using namespace rankmatch;

TEST_CASE("build from edges") {
  const Graph g = Graph::from_edges(2, {{0, 1}});
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 0));

  const Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(p4.degree(0) == 1);
  CHECK(p4.degree(1) == 2);
  CHECK(p4.has_edge(1, 2));
  CHECK_FALSE(p4.has_edge(0, 3));
}

TEST_CASE("invalid edges are rejected with the offending pair") {
  CHECK_THROWS_WITH_AS(Graph::from_edges(3, {{0, 0}}),
                       doctest::Contains("{0,0}"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Graph::from_edges(2, {{0, 5}}),
                       doctest::Contains("{0,5}"), std::invalid_argument);
}

TEST_CASE("duplicate edges are deduplicated") {
  const Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(1) == 2);
}

TEST_CASE("adjacency symmetry on generated graphs") {
  PhiloxRng rng(5, 0);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_graph(12, 0.3, 1000 + trial);
    for (int u = 0; u < g.node_count(); ++u)
      for (const std::int32_t v : g.neighbors(u)) {
        CHECK(v != u);
        CHECK(g.has_edge(v, u));
      }
  }
}

TEST_CASE("perfect matching validation") {
  const Graph p4 = path_graph(4);
  PerfectMatching good;
  good.partner = {1, 0, 3, 2};
  CHECK(validate_perfect_matching(p4, good));

  PerfectMatching bad;
  bad.partner = {3, 2, 1, 0};  // {0,3} is not an edge
  CHECK_FALSE(validate_perfect_matching(p4, bad));

  const Graph single = Graph::from_edges(2, {{0, 1}});
  PerfectMatching pair;
  pair.partner = {1, 0};
  CHECK(validate_perfect_matching(single, pair));

  PerfectMatching fixed_point;
  fixed_point.partner = {0, 1, 3, 2};
  CHECK_FALSE(validate_perfect_matching(p4, fixed_point));
}

TEST_CASE("two-block family: smallest instance expands the adjacency rule") {
  auto [g, m] = double_bomb(1, 1.0);
  CHECK(g.node_count() == 8);
  // Sides are u_1..u_4 = 0..3 and v_1..v_4 = 4..7.
  std::vector<NodePair> expect = {{0, 4}, {1, 5}, {2, 6}, {3, 7},
                                  {0, 5}, {0, 6}, {1, 7}, {2, 7}};
  for (auto& [a, b] : expect) CHECK(g.has_edge(a, b));
  CHECK(g.edge_count() == static_cast<std::int64_t>(expect.size()));
  CHECK(validate_perfect_matching(g, m));
  for (int i = 0; i < 4; ++i) CHECK(m.partner_of(i) == 4 + i);
}

TEST_CASE("two-block family: rounding and node counts") {
  CHECK(double_bomb_k(20, 0.63) == 13);  // 12.6 rounds up
  CHECK(double_bomb_k(50, 0.63) == 32);  // 31.5 rounds half up
  CHECK(double_bomb(20, 0.63).first.node_count() == 146);
  for (const int n : {1, 3, 7}) {
    auto [g, m] = double_bomb(n, 0.8);
    const int k = double_bomb_k(n, 0.8);
    CHECK(g.node_count() == 2 * (3 * n + k));
    CHECK(validate_perfect_matching(g, m));
  }
  CHECK_THROWS_AS(double_bomb(0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(double_bomb(1, 0.2), std::invalid_argument);  // k rounds to 0
}

TEST_CASE("edge list parsing") {
  const ParsedGraph a = read_edge_list("n 2\ne 0 1\nm 0 1\n");
  CHECK(a.graph.node_count() == 2);
  CHECK(a.matching.has_value());
  CHECK(a.matching->partner_of(0) == 1);

  const ParsedGraph b = read_edge_list("n 4\ne 0 1\ne 1 2\ne 2 3\n");
  CHECK(b.graph.edge_count() == 3);
  CHECK_FALSE(b.matching.has_value());

  // Comments and blank lines are fine.
  const ParsedGraph c = read_edge_list("# header\nn 2\n\ne 0 1  # tail\n");
  CHECK(c.graph.edge_count() == 1);
}

TEST_CASE("edge list errors carry the line number or pair") {
  CHECK_THROWS_WITH_AS(read_edge_list("n 2\ne 0 5\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(read_edge_list("e 0 1\n"), doctest::Contains("line 1"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(read_edge_list("n 2\nq 0 1\n"),
                       doctest::Contains("line 2"), std::invalid_argument);
  // Matching pair that is not an edge names the pair.
  CHECK_THROWS_WITH_AS(read_edge_list("n 4\ne 0 1\ne 1 2\ne 2 3\nm 0 3\n"),
                       doctest::Contains("{0,3}"), std::invalid_argument);
}

TEST_CASE("write/read round trip") {
  PhiloxRng rng(77, 0);
  for (int trial = 0; trial < 20; ++trial) {
    auto [g, m] = random_perfect_matching_graph(8, 0.4, 500 + trial);
    const ParsedGraph back = read_edge_list(write_edge_list(g, &m));
    CHECK(back.graph.edges() == g.edges());
    REQUIRE(back.matching.has_value());
    CHECK(back.matching->partner == m.partner);
  }
  const Graph plain = random_graph(9, 0.3, 4);
  CHECK(read_edge_list(write_edge_list(plain)).graph.edges() == plain.edges());
}

TEST_CASE("family generators") {
  CHECK(path_graph(6).edge_count() == 5);
  CHECK(cycle_graph(6).edge_count() == 6);
  CHECK(complete_graph(6).edge_count() == 15);
  CHECK(complete_bipartite(3, 3).edge_count() == 9);
  CHECK(validate_perfect_matching(cycle_graph(6),
                                  consecutive_pairs_matching(6)));
  CHECK(validate_perfect_matching(complete_graph(6),
                                  consecutive_pairs_matching(6)));
}
