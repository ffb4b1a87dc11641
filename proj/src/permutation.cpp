#include "rankmatch/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace rankmatch {

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("Permutation: size must be positive");
  Permutation p;
  p.node_at_.resize(n);
  std::iota(p.node_at_.begin(), p.node_at_.end(), 0);
  p.rebuild_ranks();
  return p;
}

Permutation Permutation::from_node_order(std::vector<std::int32_t> order) {
  const int n = static_cast<int>(order.size());
  if (n < 1) throw std::invalid_argument("Permutation: empty node order");
  std::vector<char> seen(n, 0);
  for (const std::int32_t v : order) {
    if (v < 0 || v >= n || seen[v])
      throw std::invalid_argument("Permutation: order is not a bijection");
    seen[v] = 1;
  }
  Permutation p;
  p.node_at_ = std::move(order);
  p.rebuild_ranks();
  return p;
}

Permutation Permutation::remove_insert(int node, int new_rank) const {
  const int n = size();
  if (node < 0 || node >= n)
    throw std::invalid_argument("remove_insert: node out of range");
  if (new_rank < 1 || new_rank > n)
    throw std::invalid_argument("remove_insert: rank out of range");
  Permutation p;
  p.node_at_.reserve(n);
  for (const std::int32_t v : node_at_)
    if (v != node) p.node_at_.push_back(v);
  p.node_at_.insert(p.node_at_.begin() + (new_rank - 1), node);
  p.rebuild_ranks();
  return p;
}

void Permutation::rebuild_ranks() {
  rank_of_.assign(node_at_.size(), 0);
  for (int r = 0; r < static_cast<int>(node_at_.size()); ++r)
    rank_of_[node_at_[r]] = r + 1;
}

}  // namespace rankmatch
