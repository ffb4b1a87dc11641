#include "rankmatch/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rankmatch/rng.hpp"

namespace rankmatch {

namespace {

std::string pair_str(std::int64_t u, std::int64_t v) {
  std::ostringstream os;
  os << "{" << u << "," << v << "}";
  return os.str();
}

}  // namespace

Graph Graph::from_edges(int node_count, const std::vector<NodePair>& edges) {
  if (node_count < 1)
    throw std::invalid_argument("Graph: node count must be positive");
  std::vector<NodePair> normalized;
  normalized.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= node_count || b >= node_count)
      throw std::invalid_argument("Graph: node id out of range in edge " +
                                  pair_str(a, b));
    if (a == b)
      throw std::invalid_argument("Graph: self-loop " + pair_str(a, b));
    normalized.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  Graph g;
  g.node_count_ = node_count;
  std::vector<std::int32_t> deg(node_count, 0);
  for (const auto& [a, b] : normalized) {
    ++deg[a];
    ++deg[b];
  }
  g.offsets_.assign(node_count + 1, 0);
  for (int u = 0; u < node_count; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
  g.neighbors_.resize(g.offsets_[node_count]);
  std::vector<std::int32_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [a, b] : normalized) {
    g.neighbors_[cursor[a]++] = b;
    g.neighbors_[cursor[b]++] = a;
  }
  // Neighbor lists come out sorted because the edge list was sorted, but the
  // reverse direction interleaves; sort each list to keep the invariant.
  for (int u = 0; u < node_count; ++u) {
    auto* lo = g.neighbors_.data() + g.offsets_[u];
    std::sort(lo, lo + deg[u]);
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<NodePair> Graph::edges() const {
  std::vector<NodePair> out;
  out.reserve(static_cast<std::size_t>(edge_count()));
  for (int u = 0; u < node_count_; ++u)
    for (const std::int32_t v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::string perfect_matching_violation(const Graph& g,
                                       const PerfectMatching& m) {
  const int n = g.node_count();
  if (static_cast<int>(m.partner.size()) != n)
    return "matching does not cover all nodes";
  for (int u = 0; u < n; ++u) {
    const int v = m.partner[u];
    if (v < 0 || v >= n) return "partner of " + std::to_string(u) + " out of range";
    if (v == u) return "node " + std::to_string(u) + " paired with itself";
    if (m.partner[v] != u)
      return "pair " + pair_str(u, v) + " is not mutual";
    if (!g.has_edge(u, v))
      return "pair " + pair_str(u, v) + " is not an edge";
  }
  return "";
}

bool validate_perfect_matching(const Graph& g, const PerfectMatching& m) {
  return perfect_matching_violation(g, m).empty();
}

Graph path_graph(int n) {
  std::vector<NodePair> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
  std::vector<NodePair> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<NodePair> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

Graph complete_bipartite(int left, int right) {
  std::vector<NodePair> e;
  for (int i = 0; i < left; ++i)
    for (int j = 0; j < right; ++j) e.emplace_back(i, left + j);
  return Graph::from_edges(left + right, e);
}

PerfectMatching consecutive_pairs_matching(int n) {
  if (n % 2 != 0)
    throw std::invalid_argument("consecutive_pairs_matching: odd node count");
  PerfectMatching m;
  m.partner.resize(n);
  for (int i = 0; i < n; i += 2) {
    m.partner[i] = i + 1;
    m.partner[i + 1] = i;
  }
  return m;
}

int double_bomb_k(int block_size, double eps) {
  return static_cast<int>(std::floor(eps * block_size + 0.5));
}

std::pair<Graph, PerfectMatching> double_bomb(int block_size, double eps) {
  const int n = block_size;
  if (n < 1) throw std::invalid_argument("double_bomb: block size must be >= 1");
  const int k = double_bomb_k(n, eps);
  if (k < 1)
    throw std::invalid_argument(
        "double_bomb: eps too small, rounded block fraction is zero");
  const int side = 3 * n + k;
  auto left = [](int i) { return i - 1; };           // u_i, 1-based i
  auto right = [side](int j) { return side + j - 1; };  // v_j, 1-based j

  std::vector<NodePair> e;
  for (int i = 1; i <= side; ++i) e.emplace_back(left(i), right(i));
  for (int i = 1; i <= n; ++i)
    for (int j = n + 1; j <= 2 * n + k; ++j) e.emplace_back(left(i), right(j));
  for (int i = n + 1; i <= 2 * n + k; ++i)
    for (int j = 2 * n + k + 1; j <= side; ++j) e.emplace_back(left(i), right(j));

  Graph g = Graph::from_edges(2 * side, e);
  PerfectMatching m;
  m.partner.resize(2 * side);
  for (int i = 1; i <= side; ++i) {
    m.partner[left(i)] = right(i);
    m.partner[right(i)] = left(i);
  }
  return {std::move(g), std::move(m)};
}

std::pair<Graph, PerfectMatching> random_perfect_matching_graph(
    int n, double extra_edge_prob, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument(
        "random_perfect_matching_graph: need even n >= 2");
  PhiloxRng rng(seed, /*stream=*/0);
  std::vector<std::int32_t> label(n);
  std::iota(label.begin(), label.end(), 0);
  fisher_yates(label, rng);

  std::vector<NodePair> e;
  PerfectMatching m;
  m.partner.resize(n);
  for (int i = 0; i < n; i += 2) {
    e.emplace_back(label[i], label[i + 1]);
    m.partner[label[i]] = label[i + 1];
    m.partner[label[i + 1]] = label[i];
  }
  const auto thresh = static_cast<std::uint64_t>(
      extra_edge_prob * 18446744073709551615.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_u64() < thresh) e.emplace_back(u, v);
  return {Graph::from_edges(n, e), std::move(m)};
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  PhiloxRng rng(seed, /*stream=*/1);
  const auto thresh = static_cast<std::uint64_t>(p * 18446744073709551615.0);
  std::vector<NodePair> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_u64() < thresh) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

ParsedGraph read_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int node_count = -1;
  std::vector<NodePair> edges;
  std::vector<NodePair> matching_pairs;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag)) continue;  // blank line

    auto fail = [line_no](const std::string& why) -> std::invalid_argument {
      return std::invalid_argument("edge list line " + std::to_string(line_no) +
                                ": " + why);
    };

    if (tag == "n") {
      long long c = 0;
      if (!(fields >> c) || c < 1) throw fail("expected 'n <positive count>'");
      if (node_count != -1) throw fail("duplicate node-count record");
      node_count = static_cast<int>(c);
    } else if (tag == "e" || tag == "m") {
      long long u = 0, v = 0;
      if (!(fields >> u >> v)) throw fail("expected two node ids");
      if (node_count == -1) throw fail("record before the 'n' line");
      if (u < 0 || v < 0 || u >= node_count || v >= node_count)
        throw fail("node id out of range in " + pair_str(u, v));
      if (tag == "e")
        edges.emplace_back(static_cast<std::int32_t>(u),
                           static_cast<std::int32_t>(v));
      else
        matching_pairs.emplace_back(static_cast<std::int32_t>(u),
                                    static_cast<std::int32_t>(v));
    } else {
      throw fail("unknown record '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra) throw fail("trailing fields");
  }
  if (node_count == -1)
    throw std::invalid_argument("edge list: missing 'n' line");

  ParsedGraph out{Graph::from_edges(node_count, edges), std::nullopt};
  if (!matching_pairs.empty()) {
    PerfectMatching m;
    m.partner.assign(node_count, -1);
    for (const auto& [u, v] : matching_pairs) {
      if (u == v || m.partner[u] != -1 || m.partner[v] != -1)
        throw std::invalid_argument("edge list: invalid matching pair " +
                                 pair_str(u, v));
      m.partner[u] = v;
      m.partner[v] = u;
    }
    const std::string why = perfect_matching_violation(out.graph, m);
    if (!why.empty())
      throw std::invalid_argument("edge list: invalid matching: " + why);
    out.matching = std::move(m);
  }
  return out;
}

std::string write_edge_list(const Graph& g, const PerfectMatching* m) {
  std::ostringstream os;
  os << "n " << g.node_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << "e " << u << " " << v << "\n";
  if (m != nullptr)
    for (int u = 0; u < g.node_count(); ++u)
      if (u < m->partner[u]) os << "m " << u << " " << m->partner[u] << "\n";
  return os.str();
}

}  // namespace rankmatch
