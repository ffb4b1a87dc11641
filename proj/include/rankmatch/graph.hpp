#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rankmatch {

using NodePair = std::pair<std::int32_t, std::int32_t>;

// Undirected simple graph over dense 0-based node ids, stored in CSR form.
// Immutable after construction; safe to share across threads.
class Graph {
 public:
  // Builds from an unordered edge list.  Duplicate edges are deduplicated;
  // self-loops and out-of-range ids are rejected (the message names the
  // offending pair).
  static Graph from_edges(int node_count, const std::vector<NodePair>& edges);

  int node_count() const { return node_count_; }
  std::int64_t edge_count() const {
    return static_cast<std::int64_t>(neighbors_.size()) / 2;
  }

  int degree(int u) const { return offsets_[u + 1] - offsets_[u]; }

  std::span<const std::int32_t> neighbors(int u) const {
    return {neighbors_.data() + offsets_[u],
            static_cast<std::size_t>(degree(u))};
  }

  // Binary search over the sorted neighbor list.
  bool has_edge(int u, int v) const;

  std::vector<NodePair> edges() const;

  // Optional external node names (unused by the algorithms).
  std::vector<std::string> labels;

 private:
  Graph() = default;

  int node_count_ = 0;
  std::vector<std::int32_t> offsets_;
  std::vector<std::int32_t> neighbors_;
};

// Total pairing of the nodes: partner[partner[u]] == u, partner[u] != u.
struct PerfectMatching {
  std::vector<std::int32_t> partner;

  int partner_of(int u) const { return partner[u]; }
};

// True iff `m` is a fixed-point-free involution on all nodes of `g` whose
// pairs are all edges of `g`.
bool validate_perfect_matching(const Graph& g, const PerfectMatching& m);

// As above but explains the first violation found (empty string if valid).
std::string perfect_matching_violation(const Graph& g,
                                       const PerfectMatching& m);

// ---- Generators ----------------------------------------------------------

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int left, int right);

// Pairs consecutive ids: {0,1}, {2,3}, ...  Valid for even paths, even
// cycles, and complete graphs of even order.
PerfectMatching consecutive_pairs_matching(int n);

// The two-block bipartite hardness family.  With k = round(eps * block_size)
// (half up), each side has 3*block_size + k nodes; writing B for that count,
// left node u_i and right node v_j (1-based) are adjacent iff i == j, or
// i <= block_size < j <= 2*block_size + k, or
// block_size < i <= 2*block_size + k < j.  Left ids are 0..B-1, right ids
// B..2B-1, and {u_i, v_i} is the designated perfect matching.
// Rejects block_size < 1 or k < 1.
std::pair<Graph, PerfectMatching> double_bomb(int block_size, double eps);

int double_bomb_k(int block_size, double eps);

// Plants the matching {0,1},{2,3},... on a seeded relabeling of the nodes and
// adds every other pair independently with probability `extra_edge_prob`.
std::pair<Graph, PerfectMatching> random_perfect_matching_graph(
    int n, double extra_edge_prob, std::uint64_t seed);

// Erdos-Renyi G(n, p), seeded.
Graph random_graph(int n, double p, std::uint64_t seed);

// ---- Edge-list text format ------------------------------------------------
//
// One record per line: "n <count>" first, then "e <u> <v>" per edge and
// optionally "m <u> <v>" per perfect-matching pair.  '#' starts a comment;
// fields are whitespace-separated; LF line endings.

struct ParsedGraph {
  Graph graph;
  std::optional<PerfectMatching> matching;
};

// Throws std::invalid_argument naming the line number (or the violating
// matching pair) on malformed input.
ParsedGraph read_edge_list(const std::string& text);

std::string write_edge_list(const Graph& g,
                            const PerfectMatching* m = nullptr);

}  // namespace rankmatch
