#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "rankmatch/harness.hpp"
#include "rankmatch/ranking.hpp"
#include "rankmatch/rng.hpp"
#include "rankmatch/verification.hpp"

using namespace rankmatch;

TEST_CASE("complete graphs always match everyone") {
  const Graph k6 = complete_graph(6);
  const PerfectMatching m = consecutive_pairs_matching(6);
  const RatioEstimate est = monte_carlo_ratio(k6, m, 2000, 123);
  CHECK(est.mean == 1.0);
  CHECK(est.std_error == 0.0);
  CHECK(est.samples == 2000);
}

TEST_CASE("same seed reproduces bit-identical results") {
  auto [g, m] = double_bomb(5, 0.8);
  const RatioEstimate a = monte_carlo_ratio(g, m, 4000, 99);
  const RatioEstimate b = monte_carlo_ratio(g, m, 4000, 99);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
  const RatioEstimate c = monte_carlo_ratio(g, m, 4000, 100);
  CHECK(a.mean != c.mean);
}

TEST_CASE("worker count does not change the result") {
  auto [g, m] = double_bomb(4, 0.9);
  const RatioEstimate serial = monte_carlo_ratio(g, m, 5000, 7, 1);
  for (const int workers : {2, 3, 5}) {
    const RatioEstimate par = monte_carlo_ratio(g, m, 5000, 7, workers);
    CHECK(par.mean == serial.mean);
    CHECK(par.std_error == serial.std_error);
  }
}

TEST_CASE("estimates stay in the guaranteed band") {
  // With a perfect matching, a maximal matching covers at least half the
  // nodes, so every sample fraction is in [1/2, 1].
  auto [g, m] = double_bomb(3, 0.7);
  const RatioEstimate est = monte_carlo_ratio(g, m, 3000, 11);
  CHECK(est.mean >= 0.5);
  CHECK(est.mean <= 1.0);
  CHECK(est.mean - 3 * est.std_error > 0.5);
}

TEST_CASE("exact ratio on tiny graphs") {
  const Graph single = Graph::from_edges(2, {{0, 1}});
  PerfectMatching pm;
  pm.partner = {1, 0};
  CHECK(exact_ratio(single, pm) == Rational(1));

  PerfectMatching p4m;
  p4m.partner = {1, 0, 3, 2};
  CHECK(exact_ratio(path_graph(4), p4m) == Rational(7, 8));

  PerfectMatching invalid;
  invalid.partner = {2, 3, 0, 1};
  CHECK_THROWS_AS(exact_ratio(path_graph(4), invalid), std::invalid_argument);
}

TEST_CASE("monte carlo agrees with exhaustive enumeration") {
  int index = 0;
  for (const CorpusEntry& entry : verification_corpus()) {
    if (entry.graph.node_count() > 6) continue;
    if (++index > 8) break;  // a spread of corpus graphs is plenty here
    const double exact =
        exact_ratio(entry.graph, entry.matching).to_double();
    const RatioEstimate est =
        monte_carlo_ratio(entry.graph, entry.matching, 20000, 500 + index);
    const double slack = std::max(4 * est.std_error, 1e-12);
    CHECK(std::abs(est.mean - exact) <= slack);
  }
}

TEST_CASE("hardness rows carry the family parameters") {
  const std::vector<int> blocks = {1, 2};
  const std::vector<HardnessRow> rows = hardness_table(1.0, blocks, 500, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].block == 1);
  CHECK(rows[0].k == 1);
  CHECK(rows[0].nodes == 8);
  CHECK(rows[1].nodes == 16);
  CHECK(rows[0].estimate.samples == 500);
  CHECK_THROWS_AS(hardness_table(0.1, blocks, 10, 1), std::invalid_argument);
}

TEST_CASE("csv output is stable and versioned") {
  const std::vector<int> blocks = {1};
  const std::vector<HardnessRow> rows = hardness_table(1.0, blocks, 300, 17);
  const std::string a = hardness_table_csv(1.0, 300, 17, rows);
  const std::string b =
      hardness_table_csv(1.0, 300, 17, hardness_table(1.0, blocks, 300, 17));
  CHECK(a == b);
  CHECK(a.find("# rankmatch csv v1") == 0);
  CHECK(a.find("command=hardness-table") != std::string::npos);
  CHECK(a.find("seed=17") != std::string::npos);
  CHECK(a.find("n,k,nodes,samples,mean,stderr\n") != std::string::npos);

  const RatioEstimate est = rows[0].estimate;
  const std::string sim = simulate_csv("double_bomb(1,1)", 8, est);
  CHECK(sim.find("command=simulate") != std::string::npos);
  CHECK(sim.find("nodes,samples,mean,stderr\n") != std::string::npos);
}

TEST_CASE("seven significant digits") {
  CHECK(format_sig7(0.52316637531) == "0.5231664");
  CHECK(format_sig7(0.72415) == "0.72415");
  CHECK(format_sig7(1.0) == "1");
}

TEST_CASE("sampled runs are maximal matchings") {
  // Replays the simulator's sampling procedure (same streams, same shuffle)
  // and checks maximality of every produced matching.
  auto [g, m] = double_bomb(3, 0.7);
  const std::uint64_t seed = 424242;
  std::vector<std::int32_t> order(g.node_count());
  for (std::uint64_t s = 0; s < 500; ++s) {
    PhiloxRng rng(seed, s);
    std::iota(order.begin(), order.end(), 0);
    fisher_yates(order, rng);
    const MatchingOutcome out =
        run_ranking(g, Permutation::from_node_order(order));
    CHECK(is_maximal_matching(g, out));
    CHECK(out.matched_count() * 2 >= g.node_count());
  }
}

TEST_CASE("exact and monte carlo ratios exceed one half on the corpus") {
  for (const CorpusEntry& entry : verification_corpus()) {
    if (entry.graph.node_count() > 6) continue;
    CHECK(exact_ratio(entry.graph, entry.matching) > Rational(1, 2));
  }
}
