#include "rankmatch/verification.hpp"

namespace rankmatch {

std::vector<CorpusEntry> verification_corpus() {
  std::vector<CorpusEntry> corpus;
  auto add = [&corpus](std::string name, Graph g, PerfectMatching m) {
    corpus.push_back({std::move(name), std::move(g), std::move(m)});
  };

  add("path_2", path_graph(2), consecutive_pairs_matching(2));
  add("path_4", path_graph(4), consecutive_pairs_matching(4));
  add("path_6", path_graph(6), consecutive_pairs_matching(6));
  add("cycle_4", cycle_graph(4), consecutive_pairs_matching(4));
  add("cycle_6", cycle_graph(6), consecutive_pairs_matching(6));
  add("complete_4", complete_graph(4), consecutive_pairs_matching(4));
  add("complete_6", complete_graph(6), consecutive_pairs_matching(6));
  {
    PerfectMatching m;
    m.partner = {3, 4, 5, 0, 1, 2};
    add("bipartite_3_3", complete_bipartite(3, 3), std::move(m));
  }
  {
    auto [g, m] = double_bomb(1, 1.0);
    add("bomb_1", std::move(g), std::move(m));
  }
  for (int s = 1; s <= 10; ++s) {
    auto [g, m] = random_perfect_matching_graph(4, 0.35, 100 + s);
    add("random_4_s" + std::to_string(s), std::move(g), std::move(m));
  }
  for (int s = 1; s <= 10; ++s) {
    auto [g, m] = random_perfect_matching_graph(6, 0.30, 200 + s);
    add("random_6_s" + std::to_string(s), std::move(g), std::move(m));
  }
  return corpus;
}

std::vector<CheckResult> run_exhaustive_checks(const CorpusEntry& entry,
                                               int cap) {
  const Graph& g = entry.graph;
  std::vector<CheckResult> out;
  auto push = [&](const std::string& check, bool pass,
                  std::string detail = "") {
    out.push_back({entry.name, check, pass, std::move(detail)});
  };

  const EventTables tables = enumerate_event_tables(g, cap);
  push("rank_partition", check_rank_partition(tables));
  push("first_rank_never_marginal", check_first_rank_never_marginal(tables));
  push("marginal_decomposition", check_marginal_decomposition(tables));
  push("weighted_marginal_bound", check_weighted_marginal_bound(tables));
  push("matched_counts_monotone", check_matched_counts_monotone(tables));
  push("greedy_property", check_greedy_property(g, cap));
  push("promotion_paths", check_promotion_paths(g, cap));
  push("removal_paths", check_removal_paths(g, cap));
  push("marginal_threshold", check_marginal_threshold(g, cap));
  push("engines_agree", check_engines_agree(g, cap));
  push("maximality", check_maximality(g, cap));
  push("ratio_above_half",
       tables.performance_ratio() > Rational(1, 2),
       "ratio=" + tables.performance_ratio().str());
  return out;
}

std::vector<CheckResult> run_boundary_checks(const CorpusEntry& entry,
                                             int cap) {
  std::vector<CheckResult> out;
  auto push = [&](const std::string& check, bool pass,
                  std::string detail = "") {
    out.push_back({entry.name, check, pass, std::move(detail)});
  };

  const RelationReport rep =
      verify_boundary_injectivity(entry.graph, entry.matching, cap);
  push("image_size_2n", rep.images_all_size_2n);
  push("images_good", rep.images_all_good);
  push("images_distinct", rep.images_distinct_per_source);
  push("per_rule_injective", rep.per_rule_injective);
  push("preimage_at_most_3", rep.max_preimage <= 3,
       "max_preimage=" + std::to_string(rep.max_preimage));
  push("count_bound", rep.count_bound_holds,
       "bad=" + std::to_string(rep.bad_count) +
           " good_total=" + std::to_string(rep.good_total));
  return out;
}

std::vector<CheckResult> run_full_verification(int cap) {
  std::vector<CheckResult> all;
  for (const CorpusEntry& entry : verification_corpus()) {
    if (entry.graph.node_count() > cap) {
      all.push_back({entry.name, "skipped", true,
                     std::to_string(entry.graph.node_count()) +
                         " nodes above cap " + std::to_string(cap)});
      continue;
    }
    for (CheckResult& r : run_exhaustive_checks(entry, cap))
      all.push_back(std::move(r));
    for (CheckResult& r : run_boundary_checks(entry, cap))
      all.push_back(std::move(r));
  }
  return all;
}

}  // namespace rankmatch
