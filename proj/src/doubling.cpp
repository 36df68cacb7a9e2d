#include "projclust/doubling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "projclust/errors.hpp"
#include "projclust/rng.hpp"

namespace projclust {
namespace {

std::vector<Index> pick_centers(std::size_t n, std::size_t count,
                                std::uint64_t seed) {
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), Index{0});
  if (count >= n) return all;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(all[i], all[j]);
  }
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

DoublingEstimate doubling_constant_estimate(const PointSet& ps,
                                            const DoublingOptions& options) {
  if (options.centers_sampled == 0) {
    throw InvalidInput("doubling_constant_estimate: centers_sampled must be >= 1");
  }
  const std::size_t n = ps.size();
  DoublingEstimate est;

  std::vector<double> cache;
  if (options.cache_distances) cache = distance_matrix(ps);
  auto dist = [&](Index i, Index j) {
    if (!cache.empty()) return cache[i * n + j];
    return std::sqrt(squared_distance(ps.point(i), ps.point(j)));
  };

  const double diam = diameter(ps);
  const double floor_r = min_positive_distance(ps);
  if (diam == 0.0) return est;

  for (double r = diam; r >= floor_r; r *= 0.5) {
    est.scales_probed.push_back(r);
  }

  const auto centers = pick_centers(n, options.centers_sampled, options.seed);
  std::vector<Index> ball;
  std::vector<double> gap;  // distance from each ball point to the chosen set
  ball.reserve(n);
  gap.reserve(n);
  for (double r : est.scales_probed) {
    const double half = 0.5 * r;
    for (Index x : centers) {
      ball.clear();
      gap.clear();
      for (Index q = 0; q < n; ++q) {
        const double dq = dist(x, q);
        if (dq <= r) {
          ball.push_back(q);
          gap.push_back(dq);
        }
      }
      std::size_t cover = 1;
      while (true) {
        std::size_t far = 0;
        for (std::size_t k = 1; k < ball.size(); ++k) {
          if (gap[k] > gap[far]) far = k;
        }
        if (gap[far] <= half) break;
        ++cover;
        const Index c = ball[far];
        for (std::size_t k = 0; k < ball.size(); ++k) {
          gap[k] = std::min(gap[k], dist(c, ball[k]));
        }
      }
      est.lambda_hat = std::max(est.lambda_hat, cover);
    }
  }
  est.ddim_hat = std::log2(static_cast<double>(est.lambda_hat));
  return est;
}

}  // namespace projclust
