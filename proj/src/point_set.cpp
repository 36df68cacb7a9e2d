#include "projclust/point_set.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "projclust/errors.hpp"

namespace projclust {

PointSet::PointSet(std::size_t n, std::size_t m, std::vector<double> coords)
    : n_(n), m_(m), coords_(std::move(coords)) {
  if (n_ == 0 || m_ == 0) {
    throw InvalidInput("PointSet needs at least one point and one dimension");
  }
  if (coords_.size() != n_ * m_) {
    throw InvalidInput("PointSet: expected " + std::to_string(n_ * m_) +
                       " coordinates, got " + std::to_string(coords_.size()));
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw InvalidInput("PointSet: non-finite coordinate");
    }
  }
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double acc = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double diff = a[k] - b[k];
    acc += diff * diff;
  }
  return acc;
}

double distance(const PointSet& ps, Index i, Index j) {
  if (i >= ps.size() || j >= ps.size()) {
    throw std::out_of_range("distance: index out of range (n = " +
                            std::to_string(ps.size()) + ")");
  }
  return std::sqrt(squared_distance(ps.point(i), ps.point(j)));
}

ClosestPair closest_pair(const PointSet& ps) {
  if (ps.size() < 2) {
    throw InvalidInput("closest_pair requires at least two points");
  }
  ClosestPair best{0, 1, std::numeric_limits<double>::infinity()};
  double best_sq = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < ps.size(); ++i) {
    for (Index j = i + 1; j < ps.size(); ++j) {
      const double sq = squared_distance(ps.point(i), ps.point(j));
      // Strict comparison keeps the first pair in lexicographic scan order.
      if (sq < best_sq) {
        best_sq = sq;
        best = {i, j, 0.0};
      }
    }
  }
  best.distance = std::sqrt(best_sq);
  return best;
}

double diameter(const PointSet& ps) {
  double best = 0.0;
  for (Index i = 0; i < ps.size(); ++i) {
    for (Index j = i + 1; j < ps.size(); ++j) {
      best = std::max(best, squared_distance(ps.point(i), ps.point(j)));
    }
  }
  return std::sqrt(best);
}

double min_positive_distance(const PointSet& ps) {
  double best = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < ps.size(); ++i) {
    for (Index j = i + 1; j < ps.size(); ++j) {
      const double sq = squared_distance(ps.point(i), ps.point(j));
      if (sq > 0.0 && sq < best) best = sq;
    }
  }
  return std::isinf(best) ? 0.0 : std::sqrt(best);
}

std::vector<double> distance_matrix(const PointSet& ps) {
  const std::size_t n = ps.size();
  std::vector<double> out(n * n, 0.0);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double d = std::sqrt(squared_distance(ps.point(i), ps.point(j)));
      out[i * n + j] = d;
      out[j * n + i] = d;
    }
  }
  return out;
}

}  // namespace projclust
