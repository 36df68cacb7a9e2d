#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projclust/point_set.hpp"

namespace projclust {

/// n standard normals drawn from the shared Rng stream for `seed`. Both
/// Gaussian-step datasets read their steps from here.
std::vector<double> gaussian_steps(std::size_t n, std::uint64_t seed);

/// Point i = g_1 e_1 + ... + g_i e_i in R^n.
PointSet gen_prefix_gauss(std::size_t n, std::uint64_t seed);

/// Point i = g_i e_i in R^n, same g as gen_prefix_gauss for the same seed.
PointSet gen_axis_gauss(std::size_t n, std::uint64_t seed);

/// R e_1, ..., R e_m in R^m.
PointSet gen_scaled_identity(std::size_t m, double scale_r);

/// Origin followed by e_1, ..., e_m in R^m.
PointSet gen_star_identity(std::size_t m);

/// Origin followed by e_i * k / C for i = 1..m, k = 1..C (i outer).
PointSet gen_axis_grid(std::size_t m, std::size_t c);

/// scale * (e_1 + ... + e_i) for i = 1..m, in R^m.
PointSet gen_walk(std::size_t m, double scale);

/// 2k^2 points in R^(k+1): a spine of k^2 points at spacing 1/k on the first
/// axis, then k teeth of k points each, tooth i offset by e_(i+1) at unit
/// distance from the spine segment [i, i + (k-1)/k].
PointSet gen_comb(std::size_t k);

/// Scale R = sqrt(t^(1/d) / 10) of the paired-points gadget.
double pair_gadget_scale(std::size_t t, std::size_t d_for_r);

/// 2t points in R^(t+1), ordered a_1, b_1, a_2, b_2, ...:
/// a_i = 2i e_1, b_i = a_i + e_(i+1) for i < t, b_t = a_t + e_(t+1) / R.
/// The closest pair is (a_t, b_t) at distance 1/R whenever R > 1.
PointSet gen_pair_gadget(std::size_t t, std::size_t d_for_r);

/// n points uniform in [0, 1)^m. A plain random cloud for sweeps and tests.
PointSet gen_uniform(std::size_t n, std::size_t m, std::uint64_t seed);

enum class InstanceKind {
  prefix_gauss,
  axis_gauss,
  scaled_identity,
  star_identity,
  axis_grid,
  walk,
  comb,
  pair_gadget,
  uniform,
};

std::string_view to_string(InstanceKind kind);
std::optional<InstanceKind> parse_instance_kind(std::string_view name);
std::vector<std::string_view> instance_kind_names();

/// Generator call in data form. `size` is the kind's primary count (n, m, k
/// or t). Recognized params: "scale" (scaled-identity R, walk scale), "grid"
/// (axis-grid C), "dim" (uniform m), "d_for_r" (pair-gadget d).
struct InstanceSpec {
  InstanceKind kind = InstanceKind::uniform;
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::map<std::string, double> params;
};

/// Throws InvalidInput for a missing or out-of-range parameter.
PointSet generate(const InstanceSpec& spec);

}  // namespace projclust
