#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "projclust/point_set.hpp"

namespace projclust {

/// A dense d x m Gaussian map with i.i.d. N(0, 1/d) entries, stored row-major.
/// The entries are a pure function of (m, d, seed).
class GaussianProjection {
 public:
  std::size_t source_dim() const { return m_; }
  std::size_t target_dim() const { return d_; }
  std::uint64_t seed() const { return seed_; }
  std::span<const double> entries() const { return entries_; }
  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * m_ + col];
  }

  /// y = G x for a single vector of length m.
  std::vector<double> map(std::span<const double> x) const;

  friend bool operator==(const GaussianProjection&,
                         const GaussianProjection&) = default;

 private:
  friend GaussianProjection sample_projection(std::size_t, std::size_t,
                                              std::uint64_t);
  GaussianProjection(std::size_t m, std::size_t d, std::uint64_t seed,
                     std::vector<double> entries)
      : m_(m), d_(d), seed_(seed), entries_(std::move(entries)) {}

  std::size_t m_;
  std::size_t d_;
  std::uint64_t seed_;
  std::vector<double> entries_;
};

/// Draws G from R^m to R^d. Entries are filled row by row from one Rng
/// stream seeded with `seed`. d > m is allowed.
GaussianProjection sample_projection(std::size_t m, std::size_t d,
                                     std::uint64_t seed);

/// Returns GX. Throws InvalidInput when ps.dim() != g.source_dim().
PointSet apply(const GaussianProjection& g, const PointSet& ps);

}  // namespace projclust
