#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "projclust/errors.hpp"
#include "projclust/projection.hpp"
#include "projclust/rng.hpp"

using namespace projclust;

namespace {

double chi_mean_over_sqrt_d(std::size_t d) {
  const double dd = static_cast<double>(d);
  return std::sqrt(2.0 / dd) * std::exp(std::lgamma((dd + 1.0) / 2.0) - std::lgamma(dd / 2.0));
}

std::vector<double> unit_vector(std::size_t m, std::size_t axis) {
  std::vector<double> x(m, 0.0);
  x[axis] = 1.0;
  return x;
}

double norm(const std::vector<double>& v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

}  // namespace

TEST(Rng, BoundedDrawsStayInRange) {
  Rng rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.below(7)];
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(SampleProjection, DeterministicInSeed) {
  const auto a = sample_projection(13, 4, 99);
  const auto b = sample_projection(13, 4, 99);
  const auto c = sample_projection(13, 4, 100);
  EXPECT_EQ(a, b);
  EXPECT_NE(a.entries()[0], c.entries()[0]);
  EXPECT_EQ(a.entries().size(), 52u);
  EXPECT_THROW(sample_projection(0, 3, 1), InvalidInput);
  EXPECT_THROW(sample_projection(3, 0, 1), InvalidInput);
}

TEST(SampleProjection, EntryMomentsMatchDefinition) {
  const auto g = sample_projection(25000, 4, 2024);  // 1e5 entries
  const auto e = g.entries();
  const double n = static_cast<double>(e.size());
  const double mean = std::accumulate(e.begin(), e.end(), 0.0) / n;
  double ss = 0.0;
  for (double x : e) ss += (x - mean) * (x - mean);
  const double var = ss / (n - 1.0);
  EXPECT_NEAR(var, 0.25, 0.05 * 0.25);
  EXPECT_LT(std::abs(mean), 4.0 * std::sqrt(0.25) / std::sqrt(n));
}

TEST(SampleProjection, TargetLargerThanSourceIsAllowed) {
  const auto g = sample_projection(2, 9, 1);
  EXPECT_EQ(g.target_dim(), 9u);
  EXPECT_EQ(g.map(std::vector<double>{1.0, 0.0}).size(), 9u);
}

TEST(Apply, LinearityAndShape) {
  const auto g = sample_projection(6, 3, 8);
  const PointSet origin(1, 6, std::vector<double>(6, 0.0));
  const auto o = apply(g, origin);
  EXPECT_EQ(o.size(), 1u);
  EXPECT_EQ(o.dim(), 3u);
  for (double c : o.coords()) EXPECT_EQ(c, 0.0);

  std::vector<double> xs(4 * 6), ys(4 * 6), sum(4 * 6), twice(4 * 6);
  for (std::size_t k = 0; k < xs.size(); ++k) {
    xs[k] = std::sin(1.0 + static_cast<double>(k));
    ys[k] = std::cos(3.0 * static_cast<double>(k));
    sum[k] = xs[k] + ys[k];
    twice[k] = 2.0 * xs[k];
  }
  const auto gx = apply(g, PointSet(4, 6, xs));
  const auto gy = apply(g, PointSet(4, 6, ys));
  const auto gs = apply(g, PointSet(4, 6, sum));
  const auto g2 = apply(g, PointSet(4, 6, twice));
  for (Index i = 0; i < 4; ++i) {
    double diff = 0.0, nx = 0.0, ny = 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
      EXPECT_EQ(g2(i, r), 2.0 * gx(i, r));  // scaling by 2 is exact
      diff += std::pow(gs(i, r) - gx(i, r) - gy(i, r), 2);
      nx += gx(i, r) * gx(i, r);
      ny += gy(i, r) * gy(i, r);
    }
    EXPECT_LE(std::sqrt(diff), 1e-12 * (std::sqrt(nx) + std::sqrt(ny)));
  }
  EXPECT_THROW(apply(g, PointSet(1, 5, std::vector<double>(5, 1.0))), InvalidInput);
}

TEST(Apply, MatchesSingleVectorMap) {
  const auto g = sample_projection(5, 2, 4);
  const PointSet ps(1, 5, {1, 2, 3, 4, 5});
  const auto y = g.map(ps.point(0));
  const auto gx = apply(g, ps);
  EXPECT_EQ(gx(0, 0), y[0]);
  EXPECT_EQ(gx(0, 1), y[1]);
}

TEST(Apply, NormStatisticsOfUnitVectors) {
  constexpr std::size_t d = 10;
  constexpr std::size_t m = 8;
  constexpr int trials = 10000;
  const auto x = unit_vector(m, 3);
  double sum_sq = 0.0, sum = 0.0, sum2 = 0.0;
  int tail = 0;
  const double t = 0.5;
  for (int k = 0; k < trials; ++k) {
    const double len = norm(sample_projection(m, d, 1000 + k).map(x));
    sum_sq += len * len;
    sum += len;
    sum2 += len * len;
    if (std::abs(len - 1.0) >= t) ++tail;
  }
  const double n = trials;
  EXPECT_NEAR(sum_sq / n, 1.0, 0.05);

  const double mean = sum / n;
  const double se = std::sqrt((sum2 / n - mean * mean) / n);
  EXPECT_LE(std::abs(mean - chi_mean_over_sqrt_d(d)), 3.0 * se);

  // Tail against 2 exp(-d t^2 / 8) plus a generous Monte-Carlo allowance.
  const double bound = 2.0 * std::exp(-static_cast<double>(d) * t * t / 8.0);
  EXPECT_LE(tail / n, bound + 0.01);
}
