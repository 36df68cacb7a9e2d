#include "projclust/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include "projclust/errors.hpp"
#include "projclust/instances.hpp"
#include "projclust/mst.hpp"
#include "projclust/projection.hpp"
#include "projclust/rng.hpp"

namespace projclust {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t threads = std::min(worker_threads(), count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

double median_of(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<Aggregate> aggregate(const std::vector<TrialRecord>& records,
                                 const std::vector<std::size_t>& d_values) {
  std::vector<Aggregate> out;
  for (std::size_t d : d_values) {
    Aggregate agg;
    agg.d = d;
    std::vector<double> ratios;
    std::map<std::string, double> metric_sums;
    double time_sum = 0.0;
    for (const auto& r : records) {
      if (r.d != d || r.error) continue;
      ratios.push_back(r.ratio);
      time_sum += r.wall_time_ms;
      for (const auto& [name, v] : r.metrics) metric_sums[name] += v;
    }
    agg.count = ratios.size();
    if (agg.count > 0) {
      const double n = static_cast<double>(agg.count);
      agg.ratio_mean = std::accumulate(ratios.begin(), ratios.end(), 0.0) / n;
      if (agg.count > 1) {
        double ss = 0.0;
        for (double x : ratios) ss += (x - agg.ratio_mean) * (x - agg.ratio_mean);
        agg.ratio_std = std::sqrt(ss / (n - 1.0));
      }
      agg.ratio_median = median_of(ratios);
      agg.time_mean_ms = time_sum / n;
      for (const auto& [name, sum] : metric_sums) agg.metric_means[name] = sum / n;
    }
    out.push_back(std::move(agg));
  }
  return out;
}

nlohmann::json base_metadata() {
  return {{"library", kLibraryVersion}, {"rng", kRngVersion}};
}

FLConfig fl_config_for(Task task, double opening_cost) {
  FLConfig cfg;
  cfg.variant = task == Task::fl_squared ? CostVariant::squared : CostVariant::linear;
  cfg.opening_cost = opening_cost;
  return cfg;
}

std::size_t facilities_opened(const PointSet& ps, CostVariant variant, double cost) {
  FLConfig cfg;
  cfg.variant = variant;
  cfg.opening_cost = cost;
  return mp_solve(ps, compute_radii(ps, cfg)).facilities.size();
}

bool within_budget(std::size_t count, std::size_t target) {
  const double gap = std::abs(static_cast<double>(count) - static_cast<double>(target));
  return gap <= 0.1 * static_cast<double>(target);
}

// Result of solving one instance in one space.
struct Solved {
  double cost = 0.0;
  FLConfig config;        // FL only
  std::vector<Index> facilities;
  std::optional<SpanningTree> tree;
};

Solved solve(Task task, const PointSet& ps, std::optional<std::size_t> budget) {
  Solved out;
  if (task == Task::mst) {
    out.tree = mst_exact(ps);
    out.cost = tree_cost_in(*out.tree, ps);
    return out;
  }
  double multiplier = 1.0;
  if (budget) {
    const auto m = calibrate_opening_cost(ps, fl_config_for(task, 1.0).variant, *budget);
    if (!m) {
      throw InvalidInput("facility budget " + std::to_string(*budget) +
                         " not reachable by opening-cost bisection");
    }
    multiplier = *m;
  }
  out.config = fl_config_for(task, multiplier);
  const auto sol = mp_solve(ps, compute_radii(ps, out.config));
  out.cost = sol.total;
  out.facilities = sol.facilities;
  return out;
}

nlohmann::json config_json(const ExperimentConfig& c) {
  nlohmann::json j{{"task", to_string(c.task)},
                   {"d_values", c.d_values},
                   {"trials", c.trials},
                   {"base_seed", c.base_seed},
                   {"input", c.input_label},
                   {"epsilon_target", c.epsilon_target}};
  j["facility_budget"] =
      c.facility_budget ? nlohmann::json(*c.facility_budget) : nlohmann::json();
  return j;
}

nlohmann::json record_json(const TrialRecord& r) {
  nlohmann::json j{{"d", r.d},
                   {"trial", r.trial},
                   {"seed", r.seed},
                   {"ratio", r.ratio},
                   {"projected_cost", r.projected_cost},
                   {"original_cost", r.original_cost},
                   {"baseline_cost", r.baseline_cost},
                   {"wall_time_ms", r.wall_time_ms},
                   {"metrics", r.metrics}};
  j["error"] = r.error ? nlohmann::json(*r.error) : nlohmann::json();
  return j;
}

nlohmann::json aggregate_json(const Aggregate& a) {
  return {{"d", a.d},
          {"count", a.count},
          {"ratio_mean", a.ratio_mean},
          {"ratio_std", a.ratio_std},
          {"ratio_median", a.ratio_median},
          {"time_mean_ms", a.time_mean_ms},
          {"metric_means", a.metric_means}};
}

}  // namespace

std::string_view to_string(Task task) {
  switch (task) {
    case Task::fl: return "fl";
    case Task::fl_squared: return "fl-squared";
    case Task::mst: return "mst";
  }
  return "unknown";
}

std::optional<Task> parse_task(std::string_view name) {
  if (name == "fl") return Task::fl;
  if (name == "fl-squared") return Task::fl_squared;
  if (name == "mst") return Task::mst;
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  if (d_values.empty()) throw InvalidInput("d_values must be nonempty");
  if (d_values.front() == 0) throw InvalidInput("d_values must be positive");
  if (!std::is_sorted(d_values.begin(), d_values.end()) ||
      std::adjacent_find(d_values.begin(), d_values.end()) != d_values.end()) {
    throw InvalidInput("d_values must be strictly ascending");
  }
  if (!(epsilon_target > 0.0 && epsilon_target <= 1.0)) {
    throw InvalidInput("epsilon_target must lie in (0, 1]");
  }
  if (facility_budget && *facility_budget == 0) {
    throw InvalidInput("facility budget must be >= 1");
  }
}

const Aggregate* ExperimentReport::aggregate_for(std::size_t d) const {
  for (const auto& a : aggregates) {
    if (a.d == d) return &a;
  }
  return nullptr;
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial,
                         std::size_t d_index, std::size_t d_count) {
  return base_seed + static_cast<std::uint64_t>(trial) * d_count + d_index;
}

std::size_t worker_threads() {
  if (const char* env = std::getenv("PROJCLUST_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::optional<double> calibrate_opening_cost(const PointSet& ps,
                                             CostVariant variant,
                                             std::size_t target) {
  if (target == 0 || target > ps.size()) return std::nullopt;
  const double diam = std::max(diameter(ps), 1e-12);
  const double unit = variant == CostVariant::linear ? diam : diam * diam;
  double lo = std::log(unit * 1e-12);
  double hi = std::log(unit * static_cast<double>(ps.size()) * 1e3);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const std::size_t count = facilities_opened(ps, variant, std::exp(mid));
    if (within_budget(count, target)) return std::exp(mid);
    if (count > target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < 1e-12) break;
  }
  return std::nullopt;
}

ExperimentReport run_ratio_sweep(const ExperimentConfig& config,
                                 const PointSet& input) {
  config.validate();
  ExperimentReport report;
  report.config = config_json(config);
  report.metadata = base_metadata();
  report.metadata["n"] = input.size();
  report.metadata["m"] = input.dim();

  std::optional<Solved> baseline;
  std::optional<std::string> baseline_error;
  const auto start = Clock::now();
  try {
    baseline = solve(config.task, input, config.facility_budget);
    report.baseline_cost = baseline->cost;
  } catch (const std::exception& e) {
    baseline_error = std::string("baseline: ") + e.what();
  }
  report.baseline_time_ms = elapsed_ms(start);

  const std::size_t dc = config.d_values.size();
  report.records.resize(dc * config.trials);
  parallel_for(report.records.size(), [&](std::size_t k) {
    TrialRecord& rec = report.records[k];
    const std::size_t di = k / config.trials;
    rec.d = config.d_values[di];
    rec.trial = k % config.trials;
    rec.seed = trial_seed(config.base_seed, rec.trial, di, dc);
    if (baseline_error) {
      rec.error = baseline_error;
      return;
    }
    rec.baseline_cost = baseline->cost;
    try {
      const auto t0 = Clock::now();
      const auto g = sample_projection(input.dim(), rec.d, rec.seed);
      const PointSet projected = apply(g, input);
      const Solved sol = solve(config.task, projected, config.facility_budget);
      rec.wall_time_ms = elapsed_ms(t0);
      rec.projected_cost = sol.cost;
      if (config.task == Task::mst) {
        rec.original_cost = tree_cost_in(*sol.tree, input);
        rec.metrics["cost_ratio"] =
            baseline->cost > 0.0 ? sol.cost / baseline->cost : 1.0;
      } else {
        rec.original_cost = evaluate_cost(input, sol.facilities, baseline->config).total;
        rec.metrics["facilities"] = static_cast<double>(sol.facilities.size());
        rec.metrics["opening_cost"] = sol.config.opening_cost;
      }
      rec.ratio = baseline->cost > 0.0 ? rec.original_cost / baseline->cost : 1.0;
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
  });
  report.aggregates = aggregate(report.records, config.d_values);
  return report;
}

std::optional<std::size_t> minimal_dimension(const ExperimentReport& report,
                                             double epsilon) {
  for (const auto& agg : report.aggregates) {
    if (agg.count > 0 && agg.ratio_mean - 1.0 <= epsilon) return agg.d;
  }
  return std::nullopt;
}

DoublingComparison run_doubling_comparison(std::size_t n,
                                           const std::vector<std::size_t>& d_values,
                                           std::size_t trials,
                                           std::uint64_t base_seed,
                                           double epsilon_target) {
  if (n < 10) throw InvalidInput("doubling comparison needs n >= 10");
  ExperimentConfig cfg;
  cfg.task = Task::mst;
  cfg.d_values = d_values;
  cfg.trials = trials;
  cfg.base_seed = base_seed;
  cfg.epsilon_target = epsilon_target;

  DoublingComparison out;
  out.epsilon_target = epsilon_target;
  cfg.input_label = "prefix-gauss:" + std::to_string(n);
  out.low_doubling = run_ratio_sweep(cfg, gen_prefix_gauss(n, base_seed));
  cfg.input_label = "axis-gauss:" + std::to_string(n);
  out.high_doubling = run_ratio_sweep(cfg, gen_axis_gauss(n, base_seed));
  out.min_d_low = minimal_dimension(out.low_doubling, epsilon_target);
  out.min_d_high = minimal_dimension(out.high_doubling, epsilon_target);
  return out;
}

std::string_view to_string(CounterexampleKind kind) {
  switch (kind) {
    case CounterexampleKind::fl_identity: return "fl-identity";
    case CounterexampleKind::mst_star: return "mst-star";
    case CounterexampleKind::mst_grid: return "mst-grid";
    case CounterexampleKind::walk: return "walk";
    case CounterexampleKind::kmeans_pairs: return "kmeans-pairs";
  }
  return "unknown";
}

std::optional<CounterexampleKind> parse_counterexample_kind(std::string_view name) {
  for (auto k : {CounterexampleKind::fl_identity, CounterexampleKind::mst_star,
                 CounterexampleKind::mst_grid, CounterexampleKind::walk,
                 CounterexampleKind::kmeans_pairs}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

ExperimentReport run_counterexample_demo(CounterexampleKind kind, std::size_t size,
                                         std::size_t d, std::size_t trials,
                                         std::uint64_t base_seed) {
  if (trials == 0) throw InvalidInput("trials must be >= 1");
  if (d == 0) throw InvalidInput("projection dimension must be >= 1");
  const double m = static_cast<double>(size);
  // sqrt(ln n / (10 d)): the growth parameter shared by the identity-based
  // constructions; at desk scale it is below 1, so it is floored.
  auto growth = [&](double n) {
    return std::sqrt(std::log(n) / (10.0 * static_cast<double>(d)));
  };

  ExperimentReport report;
  report.config = {{"experiment", "counterexample"},
                   {"kind", to_string(kind)},
                   {"size", size},
                   {"d", d},
                   {"trials", trials},
                   {"base_seed", base_seed}};
  report.metadata = base_metadata();

  PointSet instance = [&] {
    switch (kind) {
      case CounterexampleKind::fl_identity: {
        const double r = std::max(1.0, std::sqrt(growth(m)));
        report.metadata["scale_r"] = r;
        return gen_scaled_identity(size, r);
      }
      case CounterexampleKind::mst_star:
        return gen_star_identity(size);
      case CounterexampleKind::mst_grid: {
        const auto c = static_cast<std::size_t>(
            std::max(2.0, std::ceil(growth(2.0 * m + 1.0))));
        report.metadata["grid_c"] = c;
        return gen_axis_grid(size, c);
      }
      case CounterexampleKind::walk: {
        const double scale = std::pow(m, 1.0 + 1.0 / (2.0 * static_cast<double>(d)));
        report.metadata["scale"] = scale;
        return gen_walk(size, scale);
      }
      case CounterexampleKind::kmeans_pairs:
        report.metadata["scale_r"] = pair_gadget_scale(size, d);
        return gen_pair_gadget(size, d);
    }
    throw InvalidInput("unknown counterexample kind");
  }();
  report.metadata["n"] = instance.size();
  report.metadata["m"] = instance.dim();

  const std::size_t n = instance.size();
  std::vector<Index> everything(n);
  std::iota(everything.begin(), everything.end(), Index{0});
  const FLConfig unit_cost;

  // Original-space reference quantity for each kind.
  ClosestPair original_pair{0, 0, 0.0};
  switch (kind) {
    case CounterexampleKind::fl_identity:
    case CounterexampleKind::mst_star:
    case CounterexampleKind::mst_grid:
      report.baseline_cost = m;
      break;
    case CounterexampleKind::walk:
      report.baseline_cost = evaluate_cost(instance, everything, unit_cost).total;
      break;
    case CounterexampleKind::kmeans_pairs:
      original_pair = closest_pair(instance);
      report.baseline_cost = original_pair.distance;
      break;
  }

  auto nearest_other = [](const PointSet& ps, Index p) {
    double best = std::numeric_limits<double>::infinity();
    for (Index q = 0; q < ps.size(); ++q) {
      if (q != p) best = std::min(best, squared_distance(ps.point(p), ps.point(q)));
    }
    return std::sqrt(best);
  };

  report.records.resize(trials);
  parallel_for(trials, [&](std::size_t t) {
    TrialRecord& rec = report.records[t];
    rec.d = d;
    rec.trial = t;
    rec.seed = trial_seed(base_seed, t, 0, 1);
    rec.baseline_cost = report.baseline_cost;
    try {
      const auto t0 = Clock::now();
      const PointSet gx = apply(sample_projection(instance.dim(), d, rec.seed), instance);
      switch (kind) {
        case CounterexampleKind::fl_identity: {
          const auto profile = compute_radii(gx, unit_cost);
          rec.projected_cost = radii_cost_estimate(profile);
          const auto sol = mp_solve(gx, profile);
          rec.original_cost = evaluate_cost(instance, sol.facilities, unit_cost).total;
          rec.ratio = rec.projected_cost / m;
          rec.metrics["pullback_ratio"] = rec.original_cost / m;
          rec.metrics["facilities"] = static_cast<double>(sol.facilities.size());
          break;
        }
        case CounterexampleKind::mst_star:
        case CounterexampleKind::mst_grid: {
          const auto tree = mst_exact(gx);
          rec.projected_cost = tree_cost_in(tree, gx);
          rec.original_cost = tree_cost_in(tree, instance);
          const bool star = kind == CounterexampleKind::mst_star;
          rec.ratio = (star ? rec.projected_cost : rec.original_cost) / m;
          rec.metrics[star ? "pullback_ratio" : "cost_ratio"] =
              (star ? rec.original_cost : rec.projected_cost) / m;
          break;
        }
        case CounterexampleKind::walk: {
          Index drop = 0;
          double drop_gap = std::numeric_limits<double>::infinity();
          for (Index p = 0; p < n; ++p) {
            const double gap = nearest_other(gx, p);
            if (gap < drop_gap) {
              drop_gap = gap;
              drop = p;
            }
          }
          std::vector<Index> kept;
          for (Index p = 0; p < n; ++p) {
            if (p != drop) kept.push_back(p);
          }
          const double proxy = evaluate_cost(gx, everything, unit_cost).total;
          rec.projected_cost = evaluate_cost(gx, kept, unit_cost).total;
          rec.original_cost = evaluate_cost(instance, kept, unit_cost).total;
          rec.ratio = rec.projected_cost / proxy;
          rec.metrics["pullback_ratio"] = rec.original_cost / report.baseline_cost;
          rec.metrics["dropped"] = static_cast<double>(drop);
          break;
        }
        case CounterexampleKind::kmeans_pairs: {
          const auto pair = closest_pair(gx);
          const Index last_a = n - 2;
          const bool unit_pair = pair.first % 2 == 0 &&
                                 pair.second == pair.first + 1 &&
                                 pair.first != last_a;
          // Centers = every point but one member of the projected closest
          // pair, preferring a member outside the short (a_t, b_t) pair.
          const Index dropped = pair.first < last_a ? pair.first : pair.second;
          rec.projected_cost = pair.distance;
          rec.original_cost = nearest_other(instance, dropped);
          rec.ratio = pair.distance / original_pair.distance;
          rec.metrics["ratio_squared"] = rec.ratio * rec.ratio;
          rec.metrics["unit_pair"] = unit_pair ? 1.0 : 0.0;
          rec.metrics["pullback_ratio"] = rec.original_cost / original_pair.distance;
          break;
        }
      }
      rec.wall_time_ms = elapsed_ms(t0);
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
  });
  report.aggregates = aggregate(report.records, {d});
  return report;
}

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) records.push_back(record_json(r));
  nlohmann::json aggregates = nlohmann::json::array();
  for (const auto& a : report.aggregates) aggregates.push_back(aggregate_json(a));
  return {{"schema", kReportSchema},
          {"config", report.config},
          {"metadata", report.metadata},
          {"baseline_cost", report.baseline_cost},
          {"baseline_time_ms", report.baseline_time_ms},
          {"records", std::move(records)},
          {"aggregates", std::move(aggregates)}};
}

nlohmann::json to_json(const DoublingComparison& c) {
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json();
  };
  return {{"schema", kReportSchema},
          {"experiment", "doubling-compare"},
          {"epsilon_target", c.epsilon_target},
          {"min_d_low_doubling", opt(c.min_d_low)},
          {"min_d_high_doubling", opt(c.min_d_high)},
          {"low_doubling", to_json(c.low_doubling)},
          {"high_doubling", to_json(c.high_doubling)}};
}

nlohmann::json strip_timing(nlohmann::json j) {
  if (j.is_object()) {
    for (const char* key : {"wall_time_ms", "time_mean_ms", "baseline_time_ms",
                            "deterministic_digest"}) {
      j.erase(key);
    }
    for (auto& [key, value] : j.items()) value = strip_timing(std::move(value));
  } else if (j.is_array()) {
    for (auto& value : j) value = strip_timing(std::move(value));
  }
  return j;
}

std::string deterministic_digest(const nlohmann::json& j) {
  const std::string text = strip_timing(j).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex[h & 0xf];
  return out;
}

nlohmann::json with_digest(nlohmann::json j) {
  j["deterministic_digest"] = deterministic_digest(j);
  return j;
}

std::string records_to_csv(const ExperimentReport& report) {
  std::vector<std::string> metric_names;
  for (const auto& r : report.records) {
    for (const auto& [name, v] : r.metrics) {
      if (std::find(metric_names.begin(), metric_names.end(), name) == metric_names.end()) {
        metric_names.push_back(name);
      }
    }
  }
  std::sort(metric_names.begin(), metric_names.end());
  std::string out =
      "d,trial,seed,ratio,projected_cost,original_cost,baseline_cost,wall_time_ms";
  for (const auto& name : metric_names) out += "," + name;
  out += ",error\n";
  auto num = [](double v) {
    nlohmann::json j = v;
    return j.dump();
  };
  for (const auto& r : report.records) {
    out += std::to_string(r.d) + "," + std::to_string(r.trial) + "," +
           std::to_string(r.seed) + "," + num(r.ratio) + "," +
           num(r.projected_cost) + "," + num(r.original_cost) + "," +
           num(r.baseline_cost) + "," + num(r.wall_time_ms);
    for (const auto& name : metric_names) {
      const auto it = r.metrics.find(name);
      out += ",";
      if (it != r.metrics.end()) out += num(it->second);
    }
    out += ",";
    if (r.error) {
      std::string e = *r.error;
      std::replace(e.begin(), e.end(), ',', ';');
      out += e;
    }
    out += "\n";
  }
  return out;
}

}  // namespace projclust
