#include "rankmatch/ranking.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rankmatch/kernels.hpp"

namespace rankmatch {

int MatchingOutcome::matched_count() const {
  int c = 0;
  for (const std::int32_t p : partner) c += (p >= 0);
  return c;
}

std::vector<NodePair> MatchingOutcome::edges() const {
  std::vector<NodePair> out;
  for (std::int32_t u = 0; u < static_cast<std::int32_t>(partner.size()); ++u)
    if (partner[u] > u) out.emplace_back(u, partner[u]);
  return out;
}

ProbeList lex_probe_list(const Permutation& sigma) {
  const int n = sigma.size();
  ProbeList list;
  list.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int r1 = 1; r1 <= n; ++r1)
    for (int r2 = r1 + 1; r2 <= n; ++r2)
      list.emplace_back(sigma.node_at(r1), sigma.node_at(r2));
  return list;
}

MatchingOutcome run_probe(const Graph& g, const ProbeList& list) {
  MatchingOutcome out;
  out.partner.assign(g.node_count(), -1);
  for (const auto& [u, v] : list) {
    if (out.partner[u] < 0 && out.partner[v] < 0 && g.has_edge(u, v)) {
      out.partner[u] = v;
      out.partner[v] = u;
    }
  }
  return out;
}

int run_ranking_fast(const Graph& g, const std::int32_t* node_at, int n,
                     RankingScratch& scratch, std::int32_t* partner) {
  using kernels::kKeyAbsent;
  auto& key = scratch.key;
  key.resize(n);
  for (int r = 0; r < n; ++r) key[node_at[r]] = static_cast<std::uint32_t>(r + 1);
  if (partner != nullptr) std::fill(partner, partner + n, -1);

  const auto scan = kernels::min_key_scan();
  int matched = 0;
  for (int r = 0; r < n; ++r) {
    const std::int32_t u = node_at[r];
    if (key[u] == kKeyAbsent) continue;  // already matched
    const auto nb = g.neighbors(u);
    const std::uint32_t best = scan(nb.data(), nb.size(), key.data());
    if (best == kKeyAbsent) continue;  // no unmatched neighbor
    const std::int32_t v = node_at[best - 1];
    key[u] = kKeyAbsent;
    key[v] = kKeyAbsent;
    matched += 2;
    if (partner != nullptr) {
      partner[u] = v;
      partner[v] = u;
    }
  }
  return matched;
}

MatchingOutcome run_ranking(const Graph& g, const Permutation& sigma) {
  if (sigma.size() != g.node_count())
    throw std::invalid_argument("run_ranking: permutation size mismatch");
  MatchingOutcome out;
  out.partner.resize(g.node_count());
  RankingScratch scratch;
  run_ranking_fast(g, sigma.order().data(), g.node_count(), scratch,
                   out.partner.data());
  return out;
}

ProbeList remove_node(const ProbeList& list, int u) {
  ProbeList out;
  out.reserve(list.size());
  for (const auto& p : list)
    if (p.first != u && p.second != u) out.push_back(p);
  return out;
}

bool is_maximal_matching(const Graph& g, const MatchingOutcome& m) {
  for (int u = 0; u < g.node_count(); ++u) {
    if (m.matched(u)) continue;
    for (const std::int32_t v : g.neighbors(u))
      if (!m.matched(v)) return false;
  }
  return true;
}

std::vector<int> symmetric_difference_path(const Graph& g,
                                           const MatchingOutcome& m1,
                                           const MatchingOutcome& m2,
                                           int endpoint) {
  const int n = g.node_count();
  if (static_cast<int>(m1.partner.size()) != n ||
      static_cast<int>(m2.partner.size()) != n)
    throw std::logic_error("symmetric_difference_path: size mismatch");

  // Each node carries at most one edge from each matching, so the symmetric
  // difference has maximum degree 2 and splits into paths and cycles.  The
  // claim under test is: at most one component, it is a path, and `endpoint`
  // is one of its ends.  diff_via(u, a, b) is u's partner via matching `a`
  // when {u, partner} is a difference edge, and -1 otherwise.
  auto diff_via = [](int u, const MatchingOutcome& a,
                     const MatchingOutcome& b) -> int {
    const int p = a.partner[u];
    return (p >= 0 && p != b.partner[u]) ? p : -1;
  };

  std::int64_t diff_edges = 0;
  for (int u = 0; u < n; ++u) {
    if (diff_via(u, m1, m2) >= 0) ++diff_edges;
    if (diff_via(u, m2, m1) >= 0) ++diff_edges;
  }
  diff_edges /= 2;  // every difference edge counted once per endpoint

  std::vector<int> path;
  if (diff_edges == 0) return path;

  const bool start_via_m1 = diff_via(endpoint, m1, m2) >= 0;
  const bool start_via_m2 = diff_via(endpoint, m2, m1) >= 0;
  if (!start_via_m1 && !start_via_m2)
    throw std::logic_error(
        "symmetric_difference_path: nonempty difference does not touch the "
        "expected endpoint");
  if (start_via_m1 && start_via_m2)
    throw std::logic_error(
        "symmetric_difference_path: expected endpoint has degree 2");

  path.push_back(endpoint);
  bool via_m1 = start_via_m1;
  int cur = endpoint;
  std::int64_t walked = 0;
  for (;;) {
    const int next =
        via_m1 ? diff_via(cur, m1, m2) : diff_via(cur, m2, m1);
    if (next < 0) break;  // cur is the far end
    if (!g.has_edge(cur, next))
      throw std::logic_error(
          "symmetric_difference_path: matched pair is not an edge");
    path.push_back(next);
    if (++walked > diff_edges)
      throw std::logic_error("symmetric_difference_path: walk revisits edges");
    cur = next;
    via_m1 = !via_m1;  // alternate between the two matchings
  }

  if (walked != diff_edges)
    throw std::logic_error(
        "symmetric_difference_path: difference is not a single path from the "
        "endpoint (found " +
        std::to_string(walked) + " of " + std::to_string(diff_edges) +
        " edges)");
  return path;
}

AlternatingPathReport removal_path(const Graph& g, const ProbeList& list,
                                   int u) {
  const MatchingOutcome full = run_probe(g, list);
  const MatchingOutcome without = run_probe(g, remove_node(list, u));
  if (without.matched(u))
    throw std::logic_error("removal_path: node matched in the reduced run");
  std::vector<int> path = symmetric_difference_path(g, full, without, u);
  const bool matched = full.matched(u);
  if (matched != !path.empty())
    throw std::logic_error(
        "removal_path: path/matched contract violated for node " +
        std::to_string(u));
  return {std::move(path), matched};
}

}  // namespace rankmatch
