#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "projclust/facility_location.hpp"
#include "projclust/point_set.hpp"

namespace projclust {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kLibraryVersion = "projclust/1.0.0";

enum class Task { fl, fl_squared, mst };

std::string_view to_string(Task task);
std::optional<Task> parse_task(std::string_view name);

struct ExperimentConfig {
  Task task = Task::mst;
  std::vector<std::size_t> d_values;
  std::size_t trials = 1;
  std::uint64_t base_seed = 0;
  std::string input_label;  // echoed into the report
  double epsilon_target = 0.10;
  // Target facility count; opening costs are rescaled until MP opens it.
  std::optional<std::size_t> facility_budget;

  /// Throws InvalidInput unless trials >= 1, d_values is nonempty and
  /// strictly ascending with positive entries, and epsilon_target is in (0, 1].
  void validate() const;
};

/// One (d, trial) cell. `original_cost` is the projected-space solution
/// evaluated in the original space; `baseline_cost` is the solution computed
/// directly in the original space; ratio = original_cost / baseline_cost.
struct TrialRecord {
  std::size_t d = 0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  double ratio = 0.0;
  double projected_cost = 0.0;
  double original_cost = 0.0;
  double baseline_cost = 0.0;
  double wall_time_ms = 0.0;
  std::map<std::string, double> metrics;
  std::optional<std::string> error;
};

struct Aggregate {
  std::size_t d = 0;
  std::size_t count = 0;  // successful records
  double ratio_mean = 0.0;
  double ratio_std = 0.0;  // sample standard deviation, 0 for a single record
  double ratio_median = 0.0;
  double time_mean_ms = 0.0;
  std::map<std::string, double> metric_means;
};

struct ExperimentReport {
  nlohmann::json config;
  nlohmann::json metadata;
  double baseline_cost = 0.0;
  double baseline_time_ms = 0.0;
  std::vector<TrialRecord> records;
  std::vector<Aggregate> aggregates;

  const Aggregate* aggregate_for(std::size_t d) const;
};

/// Trial seed for the t-th trial at the i-th dimension.
std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial,
                         std::size_t d_index, std::size_t d_count);

/// Per-(d, trial) projection + solve + pullback sweep. The original-space
/// solution is computed once and shared by every record. Records are ordered
/// by (d, trial) regardless of how many worker threads ran.
ExperimentReport run_ratio_sweep(const ExperimentConfig& config,
                                 const PointSet& input);

/// Opening-cost multiplier for which MP opens within 10% of `target`
/// facilities (log-scale bisection), or nullopt if none was found.
std::optional<double> calibrate_opening_cost(const PointSet& ps,
                                             CostVariant variant,
                                             std::size_t target);

struct DoublingComparison {
  ExperimentReport low_doubling;   // prefix-sum Gaussian dataset
  ExperimentReport high_doubling;  // axis Gaussian dataset
  double epsilon_target = 0.0;
  std::optional<std::size_t> min_d_low;
  std::optional<std::size_t> min_d_high;
};

/// Smallest probed d whose mean pullback ratio is within 1 + epsilon.
std::optional<std::size_t> minimal_dimension(const ExperimentReport& report,
                                             double epsilon);

DoublingComparison run_doubling_comparison(std::size_t n,
                                           const std::vector<std::size_t>& d_values,
                                           std::size_t trials,
                                           std::uint64_t base_seed,
                                           double epsilon_target);

enum class CounterexampleKind { fl_identity, mst_star, mst_grid, walk, kmeans_pairs };

std::string_view to_string(CounterexampleKind kind);
std::optional<CounterexampleKind> parse_counterexample_kind(std::string_view name);

/// Builds the lower-bound instance of the given kind, projects it `trials`
/// times to dimension d, and records the diagnostic ratio per trial:
///   fl-identity   sum of projected radii / m
///   mst-star      projected MST cost / m
///   mst-grid      pulled-back MST cost / m
///   walk          projected cost of the drop-one solution / projected cost of
///                 opening everything (pullback ratio in metrics)
///   kmeans-pairs  projected closest-pair distance / original closest-pair
///                 distance (square and pullback ratio in metrics)
ExperimentReport run_counterexample_demo(CounterexampleKind kind, std::size_t size,
                                         std::size_t d, std::size_t trials,
                                         std::uint64_t base_seed);

/// Thread count from PROJCLUST_THREADS (0 or unset = hardware concurrency).
std::size_t worker_threads();

nlohmann::json to_json(const ExperimentReport& report);
nlohmann::json to_json(const DoublingComparison& comparison);

/// Removes every timing field so the remainder is a pure function of inputs.
nlohmann::json strip_timing(nlohmann::json j);

/// 64-bit FNV-1a over the compact dump of strip_timing(j), as 16 hex digits.
std::string deterministic_digest(const nlohmann::json& j);

/// Adds "deterministic_digest" to a JSON object (computed without it).
nlohmann::json with_digest(nlohmann::json j);

/// One row per record; metric columns follow the fixed ones in name order.
std::string records_to_csv(const ExperimentReport& report);

}  // namespace projclust
