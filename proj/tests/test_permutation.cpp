#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rankmatch/events.hpp"
#include "rankmatch/permutation.hpp"
#include "rankmatch/rng.hpp"

using namespace rankmatch;

TEST_CASE("identity and bijection invariants") {
  const Permutation p = Permutation::identity(4);
  for (int u = 0; u < 4; ++u) {
    CHECK(p.rank_of(u) == u + 1);
    CHECK(p.node_at(u + 1) == u);
  }
  CHECK_THROWS_AS(Permutation::from_node_order({0, 0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_node_order({0, 3}), std::invalid_argument);
}

TEST_CASE("remove_insert examples") {
  // (a,b,c) with c moved to the front becomes (c,a,b).
  const Permutation abc = Permutation::from_node_order({0, 1, 2});
  CHECK(abc.remove_insert(2, 1) == Permutation::from_node_order({2, 0, 1}));
  // Reinsertion at a node's own rank is the identity operation.
  CHECK(abc.remove_insert(0, 1) == abc);
  // (a,b,c,d) with b sent to the back becomes (a,c,d,b).
  const Permutation abcd = Permutation::from_node_order({0, 1, 2, 3});
  CHECK(abcd.remove_insert(1, 4) ==
        Permutation::from_node_order({0, 2, 3, 1}));
  CHECK_THROWS_AS(abcd.remove_insert(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(abcd.remove_insert(1, 0), std::invalid_argument);
}

TEST_CASE("remove_insert preserves relative order of other nodes") {
  PhiloxRng rng(3, 0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.uniform_below(7));
    std::vector<std::int32_t> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    fisher_yates(order, rng);
    const Permutation sigma = Permutation::from_node_order(order);
    const int u = static_cast<int>(rng.uniform_below(n));
    const int r = 1 + static_cast<int>(rng.uniform_below(n));
    const Permutation moved = sigma.remove_insert(u, r);

    CHECK(moved.rank_of(u) == r);
    CHECK(moved.remove_insert(u, sigma.rank_of(u)) == sigma);
    std::vector<int> before, after;
    for (const std::int32_t v : sigma.order())
      if (v != u) before.push_back(v);
    for (const std::int32_t v : moved.order())
      if (v != u) after.push_back(v);
    CHECK(before == after);
  }
}

TEST_CASE("permutation index round trip") {
  const int n = 5;
  std::uint64_t expect = 0;
  for_each_permutation(n, [&](const std::int32_t* node_at) {
    CHECK(permutation_index(node_at, n) == expect);
    ++expect;
  });
  CHECK(expect == factorial(n));
}
