#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace projclust {

using Index = std::size_t;

/// An immutable n x m array of finite coordinates, stored row-major.
class PointSet {
 public:
  /// Throws InvalidInput if n or m is zero, if coords.size() != n * m, or if
  /// any coordinate is not finite.
  PointSet(std::size_t n, std::size_t m, std::vector<double> coords);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return m_; }

  std::span<const double> point(Index i) const {
    return {coords_.data() + i * m_, m_};
  }
  double operator()(Index i, std::size_t k) const { return coords_[i * m_ + k]; }
  std::span<const double> coords() const { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> coords_;
};

double squared_distance(std::span<const double> a, std::span<const double> b);

/// Euclidean distance between points i and j; throws std::out_of_range on a
/// bad index.
double distance(const PointSet& ps, Index i, Index j);

struct ClosestPair {
  Index first;
  Index second;
  double distance;
};

/// Minimizing pair with first < second; ties go to the lexicographically
/// smallest (first, second). Requires n >= 2.
ClosestPair closest_pair(const PointSet& ps);

double diameter(const PointSet& ps);

/// Smallest nonzero pairwise distance, or 0 if every point coincides.
double min_positive_distance(const PointSet& ps);

/// Dense n x n distance matrix, row-major. O(n^2) memory.
std::vector<double> distance_matrix(const PointSet& ps);

}  // namespace projclust
