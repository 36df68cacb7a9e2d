#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "projclust/point_set.hpp"

namespace projclust {

struct DoublingEstimate {
  std::size_t lambda_hat = 1;  // largest greedy cover observed, in [1, n]
  double ddim_hat = 0.0;       // log2(lambda_hat)
  std::vector<double> scales_probed;
};

struct DoublingOptions {
  std::size_t centers_sampled = 64;
  std::uint64_t seed = 0;
  // Precompute the full n x n distance matrix. O(n^2) memory, much faster
  // when many centers and scales are probed.
  bool cache_distances = false;
};

/// Greedy-cover estimate of the doubling constant.
///
/// Scales run down the dyadic ladder diam, diam/2, ... while r is at least the
/// smallest positive pairwise distance. At each scale and each sampled center
/// x, B(x, r) is covered with radius-r/2 balls around data points chosen
/// farthest-first (starting from x itself, ties to the smaller index). The
/// estimate is the largest cover size seen. When centers_sampled >= n every
/// point is used as a center; otherwise a seeded sample without replacement.
DoublingEstimate doubling_constant_estimate(const PointSet& ps,
                                            const DoublingOptions& options);

inline DoublingEstimate doubling_constant_estimate(const PointSet& ps,
                                                   std::size_t centers_sampled,
                                                   std::uint64_t seed) {
  return doubling_constant_estimate(ps, {centers_sampled, seed, false});
}

}  // namespace projclust
