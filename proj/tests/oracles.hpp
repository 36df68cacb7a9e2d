#pragma once

// Test-only reference computations. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "projclust/facility_location.hpp"
#include "projclust/point_set.hpp"

namespace oracle {

inline double dist(const projclust::PointSet& ps, std::size_t i, std::size_t j) {
  double acc = 0.0;
  for (std::size_t k = 0; k < ps.dim(); ++k) {
    const double diff = ps(i, k) - ps(j, k);
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

// Charge equation at p evaluated directly from coordinates.
inline double charge(const projclust::PointSet& ps, std::size_t p, double r,
                     projclust::CostVariant variant) {
  double total = 0.0;
  for (std::size_t q = 0; q < ps.size(); ++q) {
    const double d = dist(ps, p, q);
    if (d > r) continue;
    total += variant == projclust::CostVariant::linear ? r - d : r * r - d * d;
  }
  return total;
}

// Bisection on the monotone charge function; the root lies in [0, c] for the
// linear variant and [0, sqrt(c)] for the squared one.
inline double bisect_radius(const projclust::PointSet& ps, std::size_t p,
                            double c, projclust::CostVariant variant) {
  double lo = 0.0;
  double hi = variant == projclust::CostVariant::linear ? c : std::sqrt(c);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (charge(ps, p, mid, variant) < c) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Facility-location cost of a subset given as a bitmask.
inline double subset_cost(const projclust::PointSet& ps, std::uint64_t mask,
                          projclust::CostVariant variant, double opening) {
  double total = 0.0;
  for (std::size_t f = 0; f < ps.size(); ++f) {
    if (mask >> f & 1) total += opening;
  }
  for (std::size_t x = 0; x < ps.size(); ++x) {
    double best = INFINITY;
    for (std::size_t f = 0; f < ps.size(); ++f) {
      if (mask >> f & 1) best = std::min(best, dist(ps, x, f));
    }
    total += variant == projclust::CostVariant::linear ? best : best * best;
  }
  return total;
}

inline double brute_opt(const projclust::PointSet& ps,
                        projclust::CostVariant variant, double opening = 1.0) {
  double best = INFINITY;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << ps.size()); ++mask) {
    best = std::min(best, subset_cost(ps, mask, variant, opening));
  }
  return best;
}

// Uniform points with a random overall scale (log-uniform in [0.05, 20]) and
// occasional duplicated rows, so both the sparse and the crowded regimes of
// the radius equation get exercised.
inline projclust::PointSet random_instance(std::mt19937_64& gen, std::size_t n,
                                           std::size_t m) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double scale = 0.05 * std::pow(400.0, unit(gen));
  std::vector<double> coords(n * m);
  for (double& c : coords) c = scale * unit(gen);
  if (n >= 3 && unit(gen) < 0.25) {
    std::copy_n(coords.begin(), m, coords.begin() + static_cast<long>(m));
  }
  return projclust::PointSet(n, m, std::move(coords));
}

inline projclust::PointSet line(const std::vector<double>& xs) {
  return projclust::PointSet(xs.size(), 1, xs);
}

}  // namespace oracle

namespace oracle {

// True iff every non-tree edge is at least as long as every edge on the tree
// path between its endpoints (cycle property), which certifies minimality.
template <class EdgeList>
bool cycle_certificate(const projclust::PointSet& ps, const EdgeList& edges,
                       double tol = 1e-12) {
  const std::size_t n = ps.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (std::size_t s = 0; s < n; ++s) {
    // heaviest edge on the path from s to every vertex
    std::vector<double> heaviest(n, -1.0);
    std::vector<std::size_t> stack{s};
    heaviest[s] = 0.0;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v : adj[u]) {
        if (heaviest[v] >= 0.0) continue;
        heaviest[v] = std::max(heaviest[u], dist(ps, u, v));
        stack.push_back(v);
      }
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (heaviest[t] < 0.0) return false;
      if (dist(ps, s, t) < heaviest[t] - tol) return false;
    }
  }
  return true;
}

}  // namespace oracle
