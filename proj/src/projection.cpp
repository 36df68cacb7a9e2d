#include "projclust/projection.hpp"

#include <cmath>
#include <string>

#include "projclust/errors.hpp"
#include "projclust/rng.hpp"

namespace projclust {

GaussianProjection sample_projection(std::size_t m, std::size_t d,
                                     std::uint64_t seed) {
  if (m == 0 || d == 0) {
    throw InvalidInput("sample_projection: dimensions must be positive");
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  std::vector<double> entries(m * d);
  Rng rng(seed);
  for (double& e : entries) e = scale * rng.normal();
  return GaussianProjection(m, d, seed, std::move(entries));
}

std::vector<double> GaussianProjection::map(std::span<const double> x) const {
  if (x.size() != m_) {
    throw InvalidInput("GaussianProjection::map: expected a vector of length " +
                       std::to_string(m_));
  }
  std::vector<double> y(d_, 0.0);
  for (std::size_t r = 0; r < d_; ++r) {
    const double* row = entries_.data() + r * m_;
    double acc = 0.0;
    for (std::size_t k = 0; k < m_; ++k) acc += row[k] * x[k];
    y[r] = acc;
  }
  return y;
}

PointSet apply(const GaussianProjection& g, const PointSet& ps) {
  if (ps.dim() != g.source_dim()) {
    throw InvalidInput("apply: point dimension " + std::to_string(ps.dim()) +
                       " does not match projection source dimension " +
                       std::to_string(g.source_dim()));
  }
  const std::size_t n = ps.size();
  const std::size_t m = g.source_dim();
  const std::size_t d = g.target_dim();
  const auto entries = g.entries();
  std::vector<double> out(n * d);
  // Each output coordinate is summed in ascending source-coordinate order.
  for (Index i = 0; i < n; ++i) {
    const auto x = ps.point(i);
    for (std::size_t r = 0; r < d; ++r) {
      const double* row = entries.data() + r * m;
      double acc = 0.0;
      for (std::size_t k = 0; k < m; ++k) acc += row[k] * x[k];
      out[i * d + r] = acc;
    }
  }
  return PointSet(n, d, std::move(out));
}

}  // namespace projclust
