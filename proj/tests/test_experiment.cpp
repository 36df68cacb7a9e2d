#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "projclust/errors.hpp"
#include "projclust/experiment.hpp"
#include "projclust/instances.hpp"

using namespace projclust;

namespace {

ExperimentConfig mst_config(std::vector<std::size_t> ds, std::size_t trials) {
  ExperimentConfig cfg;
  cfg.task = Task::mst;
  cfg.d_values = std::move(ds);
  cfg.trials = trials;
  cfg.base_seed = 11;
  cfg.input_label = "uniform";
  return cfg;
}

}  // namespace

TEST(TrialSeed, Formula) {
  EXPECT_EQ(trial_seed(100, 0, 0, 3), 100u);
  EXPECT_EQ(trial_seed(100, 2, 1, 3), 107u);
}

TEST(RatioSweep, MstRecordsAreOrderedAndPullbackIsAtLeastOne) {
  const auto ps = gen_uniform(25, 8, 2);
  const auto report = run_ratio_sweep(mst_config({2, 4}, 2), ps);
  ASSERT_EQ(report.records.size(), 4u);
  std::vector<std::uint64_t> seeds;
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& r = report.records[k];
    EXPECT_EQ(r.d, k < 2 ? 2u : 4u);
    EXPECT_EQ(r.trial, k % 2);
    EXPECT_FALSE(r.error.has_value());
    EXPECT_GE(r.ratio, 1.0 - 1e-12);
    EXPECT_DOUBLE_EQ(r.ratio, r.original_cost / report.baseline_cost);
    EXPECT_TRUE(r.metrics.count("cost_ratio"));
    seeds.push_back(r.seed);
  }
  std::sort(seeds.begin(), seeds.end());
  EXPECT_EQ(std::adjacent_find(seeds.begin(), seeds.end()), seeds.end());
  ASSERT_EQ(report.aggregates.size(), 2u);
  EXPECT_EQ(report.aggregate_for(4)->count, 2u);
  EXPECT_EQ(report.aggregate_for(3), nullptr);
}

TEST(RatioSweep, HighDimensionControlStaysClose) {
  const auto ps = gen_uniform(20, 5, 4);
  const auto report = run_ratio_sweep(mst_config({400}, 3), ps);
  EXPECT_LT(report.aggregates[0].ratio_mean, 1.05);
  EXPECT_NEAR(report.aggregates[0].metric_means.at("cost_ratio"), 1.0, 0.1);
}

TEST(RatioSweep, FacilityLocationOnOnePoint) {
  ExperimentConfig cfg = mst_config({1, 3}, 2);
  cfg.task = Task::fl;
  const auto report = run_ratio_sweep(cfg, gen_uniform(1, 4, 0));
  EXPECT_DOUBLE_EQ(report.baseline_cost, 1.0);
  for (const auto& r : report.records) {
    EXPECT_DOUBLE_EQ(r.ratio, 1.0);
    EXPECT_DOUBLE_EQ(r.metrics.at("facilities"), 1.0);
  }
}

TEST(RatioSweep, DigestIsReproducible) {
  const auto ps = gen_uniform(30, 6, 8);
  for (auto task : {Task::mst, Task::fl, Task::fl_squared}) {
    ExperimentConfig cfg = mst_config({2, 3}, 3);
    cfg.task = task;
    const auto a = to_json(run_ratio_sweep(cfg, ps));
    const auto b = to_json(run_ratio_sweep(cfg, ps));
    EXPECT_EQ(deterministic_digest(a), deterministic_digest(b));
    EXPECT_EQ(strip_timing(a), strip_timing(b));
    cfg.base_seed += 1;
    EXPECT_NE(deterministic_digest(a), deterministic_digest(to_json(run_ratio_sweep(cfg, ps))));
  }
}

TEST(RatioSweep, ThreadCountDoesNotChangeResults) {
  const auto ps = gen_uniform(30, 6, 8);
  const auto cfg = mst_config({2, 3, 5}, 4);
  setenv("PROJCLUST_THREADS", "1", 1);
  const auto serial = deterministic_digest(to_json(run_ratio_sweep(cfg, ps)));
  setenv("PROJCLUST_THREADS", "4", 1);
  const auto parallel = deterministic_digest(to_json(run_ratio_sweep(cfg, ps)));
  unsetenv("PROJCLUST_THREADS");
  EXPECT_EQ(serial, parallel);
}

TEST(RatioSweep, ConfigValidation) {
  const auto ps = gen_uniform(5, 2, 0);
  auto bad = [&](auto mutate) {
    ExperimentConfig cfg = mst_config({2, 3}, 1);
    mutate(cfg);
    EXPECT_THROW(run_ratio_sweep(cfg, ps), InvalidInput);
  };
  bad([](ExperimentConfig& c) { c.trials = 0; });
  bad([](ExperimentConfig& c) { c.d_values = {}; });
  bad([](ExperimentConfig& c) { c.d_values = {0, 2}; });
  bad([](ExperimentConfig& c) { c.d_values = {3, 2}; });
  bad([](ExperimentConfig& c) { c.d_values = {2, 2}; });
  bad([](ExperimentConfig& c) { c.epsilon_target = 0.0; });
  bad([](ExperimentConfig& c) { c.epsilon_target = 1.5; });
  bad([](ExperimentConfig& c) { c.facility_budget = 0; });
}

TEST(MinimalDimension, PicksSmallestQualifyingD) {
  const auto ps = gen_uniform(20, 6, 1);
  const auto report = run_ratio_sweep(mst_config({1, 2, 50}, 2), ps);
  EXPECT_EQ(minimal_dimension(report, 1.0), 1u);
  for (double eps : {0.01, 0.05, 0.2}) {
    const auto d = minimal_dimension(report, eps);
    for (const auto& a : report.aggregates) {
      const bool ok = a.ratio_mean - 1.0 <= eps;
      if (d && a.d == *d) EXPECT_TRUE(ok);
      if (!d || a.d < *d) EXPECT_FALSE(ok);
    }
  }
}

TEST(Budget, CalibrationHitsTargetWithinTenPercent) {
  const auto ps = gen_uniform(60, 3, 5);
  for (auto variant : {CostVariant::linear, CostVariant::squared}) {
    for (std::size_t target : {1u, 5u, 20u}) {
      const auto cost = calibrate_opening_cost(ps, variant, target);
      ASSERT_TRUE(cost.has_value());
      FLConfig cfg;
      cfg.variant = variant;
      cfg.opening_cost = *cost;
      const auto opened = mp_solve(ps, compute_radii(ps, cfg)).facilities.size();
      EXPECT_LE(std::abs(static_cast<double>(opened) - static_cast<double>(target)),
                0.1 * static_cast<double>(target) + 1e-9);
    }
  }
  EXPECT_FALSE(calibrate_opening_cost(ps, CostVariant::linear, 0).has_value());
  EXPECT_FALSE(calibrate_opening_cost(ps, CostVariant::linear, 61).has_value());
}

TEST(Budget, SweepRecordsBudgetedSolutions) {
  ExperimentConfig cfg = mst_config({3}, 2);
  cfg.task = Task::fl;
  cfg.facility_budget = 6;
  const auto report = run_ratio_sweep(cfg, gen_uniform(50, 4, 3));
  for (const auto& r : report.records) {
    ASSERT_FALSE(r.error.has_value());
    EXPECT_NEAR(r.metrics.at("facilities"), 6.0, 0.6 + 1e-9);
  }
}

TEST(Budget, UnreachableBudgetIsReportedPerRecord) {
  ExperimentConfig cfg = mst_config({2}, 2);
  cfg.task = Task::fl;
  cfg.facility_budget = 30;
  const auto report = run_ratio_sweep(cfg, gen_uniform(10, 3, 3));
  ASSERT_EQ(report.records.size(), 2u);
  for (const auto& r : report.records) EXPECT_TRUE(r.error.has_value());
  EXPECT_EQ(report.aggregates[0].count, 0u);
}

TEST(Counterexamples, SmallRunsProduceTheirMetrics) {
  struct Case {
    CounterexampleKind kind;
    std::size_t size;
    const char* metric;
  };
  for (const Case& c : {Case{CounterexampleKind::fl_identity, 32, "facilities"},
                        Case{CounterexampleKind::mst_star, 40, "pullback_ratio"},
                        Case{CounterexampleKind::mst_grid, 12, "cost_ratio"},
                        Case{CounterexampleKind::walk, 30, "dropped"},
                        Case{CounterexampleKind::kmeans_pairs, 20, "ratio_squared"}}) {
    const auto report = run_counterexample_demo(c.kind, c.size, 3, 3, 5);
    ASSERT_EQ(report.records.size(), 3u) << to_string(c.kind);
    for (const auto& r : report.records) {
      ASSERT_FALSE(r.error.has_value()) << *r.error;
      EXPECT_GT(r.ratio, 0.0);
      EXPECT_TRUE(r.metrics.count(c.metric)) << to_string(c.kind);
    }
    EXPECT_EQ(deterministic_digest(to_json(report)),
              deterministic_digest(to_json(run_counterexample_demo(c.kind, c.size, 3, 3, 5))));
    EXPECT_EQ(parse_counterexample_kind(to_string(c.kind)), c.kind);
  }
  EXPECT_FALSE(parse_counterexample_kind("bogus").has_value());
}

TEST(Counterexamples, StarShrinksUnderProjection) {
  const auto report = run_counterexample_demo(CounterexampleKind::mst_star, 500, 2, 5, 1);
  EXPECT_LT(report.aggregates[0].ratio_median, 1.0);
}

TEST(Reports, JsonAndCsvShape) {
  const auto report = run_ratio_sweep(mst_config({2}, 2), gen_uniform(8, 3, 0));
  const auto j = with_digest(to_json(report));
  EXPECT_EQ(j.at("schema"), kReportSchema);
  EXPECT_EQ(j.at("deterministic_digest").get<std::string>().size(), 16u);
  EXPECT_EQ(j.at("deterministic_digest"), deterministic_digest(to_json(report)));
  const auto stripped = strip_timing(j);
  EXPECT_FALSE(stripped.contains("baseline_time_ms"));
  EXPECT_FALSE(stripped.at("records")[0].contains("wall_time_ms"));

  std::istringstream csv(records_to_csv(report));
  std::string header, line;
  std::getline(csv, header);
  EXPECT_EQ(header,
            "d,trial,seed,ratio,projected_cost,original_cost,baseline_cost,"
            "wall_time_ms,cost_ratio,error");
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 2u);
  EXPECT_EQ(parse_task("fl-squared"), Task::fl_squared);
  EXPECT_FALSE(parse_task("kmeans").has_value());
}
