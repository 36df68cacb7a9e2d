#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "projclust/point_set.hpp"

namespace projclust {

enum class CostVariant { linear, squared };

const char* to_string(CostVariant v);

/// Objective parameters. Uniform opening cost unless per_point_costs is set,
/// in which case it must hold one positive finite entry per point.
struct FLConfig {
  CostVariant variant = CostVariant::linear;
  double opening_cost = 1.0;
  std::vector<double> per_point_costs;

  double cost_of(Index p) const {
    return per_point_costs.empty() ? opening_cost : per_point_costs[p];
  }
  bool uniform() const { return per_point_costs.empty(); }

  /// Throws InvalidInput unless the costs are valid for an n-point set.
  void validate(std::size_t n) const;
};

/// Per-point radii r_p of the charge equation
///   linear:  sum over q in B(p, r) of (r - |p - q|)     = c_p
///   squared: sum over q in B(p, r) of (r^2 - |p - q|^2) = c_p
struct RadiusProfile {
  std::vector<double> radii;
  FLConfig config;

  CostVariant variant() const { return config.variant; }
};

struct FacilitySolution {
  std::vector<Index> facilities;  // sorted, unique, nonempty
  std::vector<Index> assignment;  // nearest open facility, ties to smaller index
  double opening_cost_total = 0.0;
  double connection_cost_total = 0.0;
  double total = 0.0;
};

/// Exact piecewise solve of the charge equation at every point: distances
/// from p are sorted and the unique segment holding the root is located with
/// prefix sums. The squared variant is solved in s = r^2. Balls are closed.
RadiusProfile compute_radii(const PointSet& ps, const FLConfig& config);

/// Left-hand side of the charge equation at point p evaluated at radius r.
double ball_charge(const PointSet& ps, Index p, double r, CostVariant variant);

/// Sum of r_p (linear) or of r_p^2 (squared).
double radii_cost_estimate(const RadiusProfile& profile);

/// Greedy Mettu-Plaxton selection: visit points by ascending radius (ties to
/// the smaller index) and open p unless an open facility lies within 2 r_p.
/// Costs are evaluated in ps under profile.config.
FacilitySolution mp_solve(const PointSet& ps, const RadiusProfile& profile);

/// Cost of a given facility set in the given space. Indices are sorted and
/// deduplicated; an empty set or an out-of-range index is InvalidInput.
FacilitySolution evaluate_cost(const PointSet& ps,
                               std::span<const Index> facilities,
                               const FLConfig& config);

struct LocalOptimality {
  bool locally_optimal = true;
  std::optional<Index> witness;  // smallest p with no facility within 3 r_p
};

LocalOptimality is_locally_optimal(const PointSet& ps,
                                   const RadiusProfile& profile,
                                   std::span<const Index> facilities);

/// F plus the smallest violating point if one exists, else F (normalized).
std::vector<Index> improve_if_violated(const PointSet& ps,
                                       const RadiusProfile& profile,
                                       std::span<const Index> facilities);

inline constexpr std::size_t kDefaultOptimumMaxN = 15;
// Ceiling on max_n itself: 2^20 subsets is already seconds of work.
inline constexpr std::size_t kOptimumHardMaxN = 20;

/// Exhaustive minimum over all nonempty facility subsets; cost ties go to the
/// lexicographically smallest subset. Throws SizeGuardError when n > max_n
/// or n > kOptimumHardMaxN.
FacilitySolution brute_force_optimum(const PointSet& ps, const FLConfig& config,
                                     std::size_t max_n = kDefaultOptimumMaxN);

}  // namespace projclust
