#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "projclust/point_set.hpp"

namespace projclust {

using Edge = std::pair<Index, Index>;

/// A spanning tree on n labeled points: n - 1 edges with first < second,
/// kept in lexicographic order.
class SpanningTree {
 public:
  /// Normalizes edge orientation and order; throws InvalidInput unless the
  /// edges form a spanning tree on [0, n).
  SpanningTree(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
};

/// Exact MST by dense Prim from vertex 0. Candidate edges are ordered by
/// (length, smaller index, larger index), which makes the tree unique.
SpanningTree mst_exact(const PointSet& ps);

/// Sum of edge lengths measured in ps. Evaluating a tree built on GX against
/// X gives the pulled-back cost.
double tree_cost_in(const SpanningTree& tree, const PointSet& ps);

struct BruteForceTree {
  SpanningTree tree;
  double cost;
};

inline constexpr std::size_t kDefaultBruteForceTreeMaxN = 7;

/// Minimum over all n^(n-2) labeled trees (Pruefer enumeration); cost ties go
/// to the lexicographically smallest edge list.
BruteForceTree brute_force_mst(const PointSet& ps,
                               std::size_t max_n = kDefaultBruteForceTreeMaxN);

/// Decodes a Pruefer sequence of length n - 2 into a tree on n >= 2 points.
SpanningTree tree_from_pruefer(std::size_t n, const std::vector<Index>& code);

struct PullbackRatio {
  double pullback;  // cost_X(MST(GX)) / cost_X(MST(X)), always >= 1
  double cost;      // cost_GX(MST(GX)) / cost_X(MST(X))
};

/// Both ratios are 1 when the original MST has zero cost.
PullbackRatio pullback_ratio(const PointSet& original, const PointSet& projected);

}  // namespace projclust
