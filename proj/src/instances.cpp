#include "projclust/instances.hpp"

#include <array>
#include <cmath>
#include <string>

#include "projclust/errors.hpp"
#include "projclust/rng.hpp"

namespace projclust {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput(what);
}

struct KindName {
  InstanceKind kind;
  std::string_view name;
};

constexpr std::array<KindName, 9> kKindNames{{
    {InstanceKind::prefix_gauss, "prefix-gauss"},
    {InstanceKind::axis_gauss, "axis-gauss"},
    {InstanceKind::scaled_identity, "scaled-identity"},
    {InstanceKind::star_identity, "star-identity"},
    {InstanceKind::axis_grid, "axis-grid"},
    {InstanceKind::walk, "walk"},
    {InstanceKind::comb, "comb"},
    {InstanceKind::pair_gadget, "pair-gadget"},
    {InstanceKind::uniform, "uniform"},
}};

std::size_t as_count(double v, const std::string& name) {
  require(std::isfinite(v) && v >= 1.0 && v == std::floor(v),
          "parameter '" + name + "' must be a positive integer");
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<double> gaussian_steps(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> g(n);
  for (double& x : g) x = rng.normal();
  return g;
}

PointSet gen_prefix_gauss(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "gen_prefix_gauss: n must be >= 1");
  const auto g = gaussian_steps(n, seed);
  std::vector<double> coords(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) coords[i * n + j] = g[j];
  }
  return PointSet(n, n, std::move(coords));
}

PointSet gen_axis_gauss(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "gen_axis_gauss: n must be >= 1");
  const auto g = gaussian_steps(n, seed);
  std::vector<double> coords(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) coords[i * n + i] = g[i];
  return PointSet(n, n, std::move(coords));
}

PointSet gen_scaled_identity(std::size_t m, double scale_r) {
  require(m >= 2, "gen_scaled_identity: m must be >= 2");
  require(std::isfinite(scale_r) && scale_r > 0.0,
          "gen_scaled_identity: scale must be positive");
  std::vector<double> coords(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) coords[i * m + i] = scale_r;
  return PointSet(m, m, std::move(coords));
}

PointSet gen_star_identity(std::size_t m) {
  require(m >= 1, "gen_star_identity: m must be >= 1");
  std::vector<double> coords((m + 1) * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) coords[(i + 1) * m + i] = 1.0;
  return PointSet(m + 1, m, std::move(coords));
}

PointSet gen_axis_grid(std::size_t m, std::size_t c) {
  require(m >= 1 && c >= 1, "gen_axis_grid: m and C must be >= 1");
  const std::size_t n = m * c + 1;
  std::vector<double> coords(n * m, 0.0);
  std::size_t row = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 1; k <= c; ++k, ++row) {
      coords[row * m + i] = static_cast<double>(k) / static_cast<double>(c);
    }
  }
  return PointSet(n, m, std::move(coords));
}

PointSet gen_walk(std::size_t m, double scale) {
  require(m >= 2, "gen_walk: m must be >= 2");
  require(std::isfinite(scale) && scale > 0.0, "gen_walk: scale must be positive");
  std::vector<double> coords(m * m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j <= i; ++j) coords[i * m + j] = scale;
  }
  return PointSet(m, m, std::move(coords));
}

PointSet gen_comb(std::size_t k) {
  require(k >= 2, "gen_comb: k must be >= 2");
  const std::size_t dim = k + 1;
  const std::size_t n = 2 * k * k;
  const double kd = static_cast<double>(k);
  std::vector<double> coords(n * dim, 0.0);
  std::size_t row = 0;
  for (std::size_t j = 0; j < k * k; ++j, ++row) {
    coords[row * dim] = static_cast<double>(j) / kd;
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j, ++row) {
      coords[row * dim] = static_cast<double>(i) + static_cast<double>(j) / kd;
      coords[row * dim + 1 + i] = 1.0;
    }
  }
  return PointSet(n, dim, std::move(coords));
}

double pair_gadget_scale(std::size_t t, std::size_t d_for_r) {
  require(t >= 2 && d_for_r >= 1, "pair gadget: need t >= 2 and d >= 1");
  return std::sqrt(std::pow(static_cast<double>(t),
                            1.0 / static_cast<double>(d_for_r)) /
                   10.0);
}

PointSet gen_pair_gadget(std::size_t t, std::size_t d_for_r) {
  const double r = pair_gadget_scale(t, d_for_r);
  const std::size_t dim = t + 1;
  std::vector<double> coords(2 * t * dim, 0.0);
  for (std::size_t i = 1; i <= t; ++i) {
    const std::size_t a = 2 * (i - 1);
    const std::size_t b = a + 1;
    const double x = 2.0 * static_cast<double>(i);
    coords[a * dim] = x;
    coords[b * dim] = x;
    // e_(i+1) is coordinate i in 0-based indexing.
    coords[b * dim + i] = i < t ? 1.0 : 1.0 / r;
  }
  return PointSet(2 * t, dim, std::move(coords));
}

PointSet gen_uniform(std::size_t n, std::size_t m, std::uint64_t seed) {
  require(n >= 1 && m >= 1, "gen_uniform: n and m must be >= 1");
  Rng rng(seed);
  std::vector<double> coords(n * m);
  for (double& c : coords) c = rng.uniform();
  return PointSet(n, m, std::move(coords));
}

std::string_view to_string(InstanceKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<InstanceKind> parse_instance_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

std::vector<std::string_view> instance_kind_names() {
  std::vector<std::string_view> out;
  for (const auto& entry : kKindNames) out.push_back(entry.name);
  return out;
}

PointSet generate(const InstanceSpec& spec) {
  auto param = [&](const std::string& name, std::optional<double> fallback) {
    const auto it = spec.params.find(name);
    if (it != spec.params.end()) return it->second;
    require(fallback.has_value(), std::string(to_string(spec.kind)) +
                                      " requires parameter '" + name + "'");
    return *fallback;
  };
  const std::size_t size = spec.size;
  require(size >= 1, "instance size must be >= 1");
  switch (spec.kind) {
    case InstanceKind::prefix_gauss:
      return gen_prefix_gauss(size, spec.seed);
    case InstanceKind::axis_gauss:
      return gen_axis_gauss(size, spec.seed);
    case InstanceKind::scaled_identity:
      return gen_scaled_identity(size, param("scale", 1.0));
    case InstanceKind::star_identity:
      return gen_star_identity(size);
    case InstanceKind::axis_grid:
      return gen_axis_grid(size, as_count(param("grid", std::nullopt), "grid"));
    case InstanceKind::walk:
      return gen_walk(size, param("scale", 1.0));
    case InstanceKind::comb:
      return gen_comb(size);
    case InstanceKind::pair_gadget:
      return gen_pair_gadget(size, as_count(param("d_for_r", 1.0), "d_for_r"));
    case InstanceKind::uniform:
      return gen_uniform(size, as_count(param("dim", 2.0), "dim"), spec.seed);
  }
  throw InvalidInput("unknown instance kind");
}

}  // namespace projclust
