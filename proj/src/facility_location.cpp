#include "projclust/facility_location.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>

#include "projclust/errors.hpp"

namespace projclust {
namespace {

std::vector<Index> normalize(std::span<const Index> facilities, std::size_t n) {
  std::vector<Index> f(facilities.begin(), facilities.end());
  std::sort(f.begin(), f.end());
  f.erase(std::unique(f.begin(), f.end()), f.end());
  if (f.empty()) throw InvalidInput("facility set must be nonempty");
  if (f.back() >= n) {
    throw InvalidInput("facility index " + std::to_string(f.back()) +
                       " out of range (n = " + std::to_string(n) + ")");
  }
  return f;
}

void check_profile(const PointSet& ps, const RadiusProfile& profile) {
  if (profile.radii.size() != ps.size()) {
    throw InvalidInput("radius profile has " +
                       std::to_string(profile.radii.size()) +
                       " entries for a point set of size " +
                       std::to_string(ps.size()));
  }
}

// Root of sum_{v_i <= x} (x - v_i) = c over ascending values v (v[0] = 0).
double solve_segment(std::span<const double> sorted_values, double c) {
  double prefix = 0.0;
  const std::size_t k = sorted_values.size();
  for (std::size_t j = 0; j < k; ++j) {
    prefix += sorted_values[j];
    const double x = (c + prefix) / static_cast<double>(j + 1);
    if (j + 1 == k || x < sorted_values[j + 1]) return x;
  }
  return c;  // unreachable: sorted_values always holds p itself
}

// Shared evaluator so the brute-force oracle and evaluate_cost agree bit for
// bit on the same facility set. sq(i, j) returns the squared distance.
template <typename SquaredDistance>
FacilitySolution cost_of_set(std::size_t n, std::vector<Index> facilities,
                             const FLConfig& config, SquaredDistance&& sq) {
  FacilitySolution sol;
  sol.assignment.resize(n);
  for (Index f : facilities) sol.opening_cost_total += config.cost_of(f);
  for (Index x = 0; x < n; ++x) {
    Index best = facilities.front();
    double best_sq = sq(x, best);
    for (std::size_t k = 1; k < facilities.size(); ++k) {
      const double s = sq(x, facilities[k]);
      if (s < best_sq) {
        best_sq = s;
        best = facilities[k];
      }
    }
    sol.assignment[x] = best;
    sol.connection_cost_total +=
        config.variant == CostVariant::linear ? std::sqrt(best_sq) : best_sq;
  }
  sol.total = sol.opening_cost_total + sol.connection_cost_total;
  sol.facilities = std::move(facilities);
  return sol;
}

}  // namespace

const char* to_string(CostVariant v) {
  return v == CostVariant::linear ? "linear" : "squared";
}

void FLConfig::validate(std::size_t n) const {
  auto bad = [](double c) { return !std::isfinite(c) || c <= 0.0; };
  if (per_point_costs.empty()) {
    if (bad(opening_cost)) {
      throw InvalidInput("opening cost must be positive and finite");
    }
    return;
  }
  if (per_point_costs.size() != n) {
    throw InvalidInput("per-point opening costs: expected " +
                       std::to_string(n) + " entries, got " +
                       std::to_string(per_point_costs.size()));
  }
  if (std::any_of(per_point_costs.begin(), per_point_costs.end(), bad)) {
    throw InvalidInput("per-point opening costs must be positive and finite");
  }
}

RadiusProfile compute_radii(const PointSet& ps, const FLConfig& config) {
  config.validate(ps.size());
  const std::size_t n = ps.size();
  RadiusProfile profile{std::vector<double>(n), config};
  const bool squared = config.variant == CostVariant::squared;
  std::vector<double> values;
  values.reserve(n);
  for (Index p = 0; p < n; ++p) {
    const double c = config.cost_of(p);
    // The point itself contributes r (or r^2), so the root never exceeds c
    // in the solved variable; farther points cannot enter the ball.
    values.clear();
    for (Index q = 0; q < n; ++q) {
      const double sq = squared_distance(ps.point(p), ps.point(q));
      const double v = squared ? sq : std::sqrt(sq);
      if (v <= c) values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    const double root = solve_segment(values, c);
    profile.radii[p] = squared ? std::sqrt(root) : root;
  }
  return profile;
}

double ball_charge(const PointSet& ps, Index p, double r, CostVariant variant) {
  double total = 0.0;
  for (Index q = 0; q < ps.size(); ++q) {
    const double sq = squared_distance(ps.point(p), ps.point(q));
    if (variant == CostVariant::linear) {
      const double d = std::sqrt(sq);
      if (d <= r) total += r - d;
    } else if (sq <= r * r) {
      total += r * r - sq;
    }
  }
  return total;
}

double radii_cost_estimate(const RadiusProfile& profile) {
  double total = 0.0;
  for (double r : profile.radii) {
    total += profile.variant() == CostVariant::linear ? r : r * r;
  }
  return total;
}

FacilitySolution mp_solve(const PointSet& ps, const RadiusProfile& profile) {
  check_profile(ps, profile);
  const std::size_t n = ps.size();
  std::vector<Index> order(n);
  std::iota(order.begin(), order.end(), Index{0});
  std::sort(order.begin(), order.end(), [&](Index a, Index b) {
    if (profile.radii[a] != profile.radii[b]) {
      return profile.radii[a] < profile.radii[b];
    }
    return a < b;
  });

  std::vector<Index> open;
  for (Index p : order) {
    const double reach = 2.0 * profile.radii[p];
    const double reach_sq = reach * reach;
    const bool covered = std::any_of(open.begin(), open.end(), [&](Index f) {
      return squared_distance(ps.point(p), ps.point(f)) <= reach_sq;
    });
    if (!covered) open.push_back(p);
  }
  return evaluate_cost(ps, open, profile.config);
}

FacilitySolution evaluate_cost(const PointSet& ps,
                               std::span<const Index> facilities,
                               const FLConfig& config) {
  config.validate(ps.size());
  return cost_of_set(ps.size(), normalize(facilities, ps.size()), config,
                     [&](Index a, Index b) {
                       return squared_distance(ps.point(a), ps.point(b));
                     });
}

LocalOptimality is_locally_optimal(const PointSet& ps,
                                   const RadiusProfile& profile,
                                   std::span<const Index> facilities) {
  check_profile(ps, profile);
  const auto f = normalize(facilities, ps.size());
  for (Index p = 0; p < ps.size(); ++p) {
    const double reach = 3.0 * profile.radii[p];
    const double reach_sq = reach * reach;
    const bool served = std::any_of(f.begin(), f.end(), [&](Index c) {
      return squared_distance(ps.point(p), ps.point(c)) <= reach_sq;
    });
    if (!served) return {false, p};
  }
  return {};
}

std::vector<Index> improve_if_violated(const PointSet& ps,
                                       const RadiusProfile& profile,
                                       std::span<const Index> facilities) {
  auto f = normalize(facilities, ps.size());
  const auto check = is_locally_optimal(ps, profile, f);
  if (check.witness) {
    f.insert(std::lower_bound(f.begin(), f.end(), *check.witness),
             *check.witness);
  }
  return f;
}

FacilitySolution brute_force_optimum(const PointSet& ps, const FLConfig& config,
                                     std::size_t max_n) {
  const std::size_t n = ps.size();
  const std::size_t cap = std::min(max_n, kOptimumHardMaxN);
  if (n > cap) {
    throw SizeGuardError("brute_force_optimum", n, cap);
  }
  config.validate(n);

  std::vector<double> sq(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      sq[i * n + j] = squared_distance(ps.point(i), ps.point(j));
    }
  }
  auto lookup = [&](Index a, Index b) { return sq[a * n + b]; };

  FacilitySolution best;
  bool have_best = false;
  std::vector<Index> subset;
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    subset.clear();
    for (Index i = 0; i < n; ++i) {
      if (mask & (std::uint64_t{1} << i)) subset.push_back(i);
    }
    auto candidate = cost_of_set(n, subset, config, lookup);
    if (!have_best || candidate.total < best.total ||
        (candidate.total == best.total &&
         candidate.facilities < best.facilities)) {
      best = std::move(candidate);
      have_best = true;
    }
  }
  return best;
}

}  // namespace projclust
