#pragma once

#include <cstdint>
#include <vector>

#include "rankmatch/graph.hpp"
#include "rankmatch/permutation.hpp"

namespace rankmatch {

// Ordered sequence of unordered node pairs to probe.
using ProbeList = std::vector<NodePair>;

// Result of a probing run.  partner[u] == -1 means u ended unmatched.
struct MatchingOutcome {
  std::vector<std::int32_t> partner;

  bool matched(int u) const { return partner[u] >= 0; }
  int matched_count() const;
  std::vector<NodePair> edges() const;

  friend bool operator==(const MatchingOutcome& a, const MatchingOutcome& b) {
    return a.partner == b.partner;
  }
};

// All C(n,2) pairs in the lexicographic order induced by sigma: pairs are
// compared by the rank of their higher-priority node, then by the rank of
// the other node.
ProbeList lex_probe_list(const Permutation& sigma);

// Greedy probing of an explicit pair list: a pair is matched iff it is an
// edge and both endpoints are still unmatched.  This is the reference
// engine; run_ranking must agree with it on lex_probe_list(sigma).
MatchingOutcome run_probe(const Graph& g, const ProbeList& list);

// Rank-sequential engine, equivalent to
// run_probe(g, lex_probe_list(sigma)) but O(n + m): for ranks t = 1..n, an
// unmatched node at rank t grabs its unmatched neighbor of minimum rank.
MatchingOutcome run_ranking(const Graph& g, const Permutation& sigma);

// The list with every pair containing u deleted, order preserved.
ProbeList remove_node(const ProbeList& list, int u);

// No edge of g has both endpoints unmatched.
bool is_maximal_matching(const Graph& g, const MatchingOutcome& m);

// Symmetric difference M1 xor M2 of two matchings, verified to be empty or a
// single simple path with `endpoint` as one end, alternating between the two
// matchings.  Returns the path's nodes in order starting from `endpoint`
// (empty when the matchings coincide).  Throws std::logic_error when the
// structure is violated; that signals an implementation bug, never bad input.
std::vector<int> symmetric_difference_path(const Graph& g,
                                           const MatchingOutcome& m1,
                                           const MatchingOutcome& m2,
                                           int endpoint);

struct AlternatingPathReport {
  std::vector<int> path;     // nodes, starting at the removed node; may be empty
  bool removed_node_matched; // matched status of the node in the full run
};

// Compares the run on `list` with the run on remove_node(list, u): their
// symmetric difference must be an alternating path starting at u, nonempty
// exactly when u is matched by the full run.
AlternatingPathReport removal_path(const Graph& g, const ProbeList& list,
                                   int u);

// ---- Hot path -------------------------------------------------------------

// Scratch buffers for repeated runs (Monte Carlo, exhaustive enumeration).
struct RankingScratch {
  std::vector<std::uint32_t> key;  // rank while unmatched, kKeyAbsent after
};

// Runs Ranking for the permutation given as a rank->node array.  Returns the
// number of matched nodes.  After the call scratch.key[v] is kKeyAbsent
// exactly for matched v.  When `partner` is non-null it receives the
// matching (size n, -1 for unmatched).
int run_ranking_fast(const Graph& g, const std::int32_t* node_at, int n,
                     RankingScratch& scratch, std::int32_t* partner = nullptr);

}  // namespace rankmatch
