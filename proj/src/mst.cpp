#include "projclust/mst.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>

#include "projclust/errors.hpp"

namespace projclust {
namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<Index> parent;
};

}  // namespace

SpanningTree::SpanningTree(std::size_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ == 0) throw InvalidInput("SpanningTree: n must be positive");
  if (edges_.size() != n_ - 1) {
    throw InvalidInput("SpanningTree: expected " + std::to_string(n_ - 1) +
                       " edges, got " + std::to_string(edges_.size()));
  }
  DisjointSets sets(n_);
  for (auto& [a, b] : edges_) {
    if (a >= n_ || b >= n_) throw InvalidInput("SpanningTree: edge index out of range");
    if (a > b) std::swap(a, b);
    if (!sets.unite(a, b)) throw InvalidInput("SpanningTree: edges contain a cycle");
  }
  std::sort(edges_.begin(), edges_.end());
}

SpanningTree mst_exact(const PointSet& ps) {
  const std::size_t n = ps.size();
  constexpr double inf = std::numeric_limits<double>::infinity();
  // Key of the cheapest known edge into the tree: (length, lo, hi).
  using Key = std::tuple<double, Index, Index>;
  std::vector<Key> best(n, Key{inf, 0, 0});
  std::vector<Index> parent(n, 0);
  std::vector<bool> in_tree(n, false);
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);

  Index current = 0;
  in_tree[0] = true;
  for (std::size_t step = 1; step < n; ++step) {
    Index next = n;
    for (Index v = 0; v < n; ++v) {
      if (in_tree[v]) continue;
      const double len = std::sqrt(squared_distance(ps.point(current), ps.point(v)));
      const Key candidate{len, std::min(current, v), std::max(current, v)};
      if (candidate < best[v]) {
        best[v] = candidate;
        parent[v] = current;
      }
      if (next == n || best[v] < best[next]) next = v;
    }
    in_tree[next] = true;
    edges.emplace_back(parent[next], next);
    current = next;
  }
  return SpanningTree(n, std::move(edges));
}

double tree_cost_in(const SpanningTree& tree, const PointSet& ps) {
  if (tree.size() != ps.size()) {
    throw InvalidInput("tree_cost_in: tree has " + std::to_string(tree.size()) +
                       " vertices but the point set has " +
                       std::to_string(ps.size()));
  }
  double total = 0.0;
  for (const auto& [a, b] : tree.edges()) {
    total += std::sqrt(squared_distance(ps.point(a), ps.point(b)));
  }
  return total;
}

SpanningTree tree_from_pruefer(std::size_t n, const std::vector<Index>& code) {
  if (n < 2 || code.size() != n - 2) {
    throw InvalidInput("tree_from_pruefer: code length must be n - 2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (Index c : code) {
    if (c >= n) throw InvalidInput("tree_from_pruefer: label out of range");
    ++degree[c];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Index c : code) {
    Index leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  Index u = n, v = n;
  for (Index i = 0; i < n; ++i) {
    if (degree[i] == 1) (u == n ? u : v) = i;
  }
  edges.emplace_back(u, v);
  return SpanningTree(n, std::move(edges));
}

BruteForceTree brute_force_mst(const PointSet& ps, std::size_t max_n) {
  const std::size_t n = ps.size();
  if (n > max_n || n > 10) {
    throw SizeGuardError("brute_force_mst", n, std::min<std::size_t>(max_n, 10));
  }
  if (n == 1) return {SpanningTree(1, {}), 0.0};
  if (n == 2) {
    SpanningTree t(2, {{0, 1}});
    return {t, tree_cost_in(t, ps)};
  }

  std::vector<Index> code(n - 2, 0);
  std::optional<BruteForceTree> best;
  while (true) {
    SpanningTree t = tree_from_pruefer(n, code);
    const double cost = tree_cost_in(t, ps);
    if (!best || cost < best->cost ||
        (cost == best->cost && t.edges() < best->tree.edges())) {
      best = BruteForceTree{std::move(t), cost};
    }
    // Odometer increment over [0, n)^(n-2).
    std::size_t pos = 0;
    while (pos < code.size() && ++code[pos] == n) code[pos++] = 0;
    if (pos == code.size()) break;
  }
  return *best;
}

PullbackRatio pullback_ratio(const PointSet& original, const PointSet& projected) {
  if (original.size() != projected.size()) {
    throw InvalidInput("pullback_ratio: point sets differ in size");
  }
  const double m = tree_cost_in(mst_exact(original), original);
  const SpanningTree projected_tree = mst_exact(projected);
  if (m == 0.0) return {1.0, 1.0};
  return {tree_cost_in(projected_tree, original) / m,
          tree_cost_in(projected_tree, projected) / m};
}

}  // namespace projclust
