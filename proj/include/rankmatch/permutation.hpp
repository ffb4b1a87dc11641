#pragma once

#include <cstdint>
#include <vector>

namespace rankmatch {

// A bijection between nodes (dense 0-based ids) and ranks 1..n.  Rank 1 is
// the highest priority.  Immutable once built.
class Permutation {
 public:
  // Identity: node i gets rank i+1.
  static Permutation identity(int n);

  // order[r] is the node at rank r+1.  Throws if not a bijection.
  static Permutation from_node_order(std::vector<std::int32_t> order);

  int size() const { return static_cast<int>(node_at_.size()); }

  // 1-based rank of `node`.
  int rank_of(int node) const { return rank_of_[node]; }

  // Node holding 1-based rank `rank`.
  int node_at(int rank) const { return node_at_[rank - 1]; }

  // Node order by rank (index r holds the node at rank r+1).
  const std::vector<std::int32_t>& order() const { return node_at_; }

  // The permutation obtained by deleting `node` and reinserting it at rank
  // `new_rank`, keeping the relative order of all other nodes.  Reinserting
  // at rank_of(node) reproduces *this.
  Permutation remove_insert(int node, int new_rank) const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.node_at_ == b.node_at_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }

 private:
  Permutation() = default;
  void rebuild_ranks();

  std::vector<std::int32_t> node_at_;
  std::vector<std::int32_t> rank_of_;  // 1-based ranks
};

}  // namespace rankmatch
