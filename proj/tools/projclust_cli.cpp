// Command-line front end: instance generation, single solves, and the
// experiment runners. JSON goes to stdout unless --output is given.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "projclust/csv_io.hpp"
#include "projclust/doubling.hpp"
#include "projclust/errors.hpp"
#include "projclust/experiment.hpp"
#include "projclust/facility_location.hpp"
#include "projclust/instances.hpp"
#include "projclust/mst.hpp"
#include "projclust/projection.hpp"

namespace pc = projclust;
using nlohmann::json;

namespace {

struct Common {
  std::string input;
  std::string output;
  std::string format = "json";
  std::size_t project = 0;  // 0 = stay in the original space
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  bool squared = false;
  double epsilon = 0.10;
  std::size_t budget = 0;  // 0 = unit opening costs
  double opening_cost = 1.0;
};

struct GenArgs {
  std::string kind;
  std::size_t size = 0;
  std::optional<double> scale;
  std::optional<std::size_t> grid;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> d_for_r;
};

void emit(const Common& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output);
  if (!out) throw pc::InvalidInput("cannot write '" + c.output + "'");
  out << text;
}

std::string render_json(const json& j) { return pc::with_digest(j).dump(2) + "\n"; }

pc::PointSet load_input(const Common& c) {
  if (c.input.empty()) throw pc::InvalidInput("--input is required");
  return pc::load_csv(c.input);
}

pc::InstanceSpec instance_spec(const GenArgs& g, std::uint64_t seed) {
  const auto kind = pc::parse_instance_kind(g.kind);
  if (!kind) throw pc::InvalidInput("unknown instance kind '" + g.kind + "'");
  pc::InstanceSpec spec{*kind, g.size, seed, {}};
  if (g.scale) spec.params["scale"] = *g.scale;
  if (g.grid) spec.params["grid"] = static_cast<double>(*g.grid);
  if (g.dim) spec.params["dim"] = static_cast<double>(*g.dim);
  if (g.d_for_r) spec.params["d_for_r"] = static_cast<double>(*g.d_for_r);
  return spec;
}

void add_gen_options(CLI::App* app, GenArgs& g) {
  app->add_option("--scale", g.scale, "Scale R (scaled-identity) or step (walk)");
  app->add_option("--grid", g.grid, "Grid resolution C (axis-grid)");
  app->add_option("--dim", g.dim, "Ambient dimension (uniform)");
  app->add_option("--d-for-r", g.d_for_r, "Dimension used in R (pair-gadget)");
}

pc::FLConfig fl_config(const Common& c) {
  pc::FLConfig cfg;
  cfg.variant = c.squared ? pc::CostVariant::squared : pc::CostVariant::linear;
  cfg.opening_cost = c.opening_cost;
  return cfg;
}

// The working space: the input itself or its projection to --project dims.
pc::PointSet working_space(const Common& c, const pc::PointSet& x, json& out) {
  if (c.project == 0) {
    out["space"] = "original";
    return x;
  }
  out["space"] = "projected";
  out["projection"] = {{"d", c.project}, {"seed", c.seed}};
  return pc::apply(pc::sample_projection(x.dim(), c.project, c.seed), x);
}

json solution_json(const pc::FacilitySolution& s) {
  return {{"facilities", s.facilities},
          {"opening_cost_total", s.opening_cost_total},
          {"connection_cost_total", s.connection_cost_total},
          {"total", s.total}};
}

void run_gen(const Common& c, const GenArgs& g) {
  const auto ps = pc::generate(instance_spec(g, c.seed));
  std::ostringstream out;
  pc::write_csv(ps, out);
  emit(c, out.str());
}

void run_radii(const Common& c) {
  const auto x = load_input(c);
  json out{{"command", "radii"}};
  const auto space = working_space(c, x, out);
  const auto profile = pc::compute_radii(space, fl_config(c));
  if (c.format == "csv") {
    std::string text = "index,radius\n";
    for (std::size_t i = 0; i < profile.radii.size(); ++i) {
      text += std::to_string(i) + "," + pc::format_double(profile.radii[i]) + "\n";
    }
    emit(c, text);
    return;
  }
  out["variant"] = pc::to_string(profile.variant());
  out["opening_cost"] = c.opening_cost;
  out["n"] = space.size();
  out["radii"] = profile.radii;
  out["cost_estimate"] = pc::radii_cost_estimate(profile);
  emit(c, render_json(out));
}

void run_fl(const Common& c) {
  const auto x = load_input(c);
  json out{{"command", "fl"}};
  const auto space = working_space(c, x, out);
  pc::FLConfig cfg = fl_config(c);
  if (c.budget > 0) {
    const auto multiplier = pc::calibrate_opening_cost(space, cfg.variant, c.budget);
    if (!multiplier) {
      throw pc::InvalidInput("facility budget " + std::to_string(c.budget) +
                             " not reachable");
    }
    cfg.opening_cost = *multiplier;
  }
  const auto profile = pc::compute_radii(space, cfg);
  const auto sol = pc::mp_solve(space, profile);
  const auto local = pc::is_locally_optimal(space, profile, sol.facilities);
  if (c.format == "csv") {
    std::string text = "index,facility\n";
    for (std::size_t i = 0; i < sol.assignment.size(); ++i) {
      text += std::to_string(i) + "," + std::to_string(sol.assignment[i]) + "\n";
    }
    emit(c, text);
    return;
  }
  out["variant"] = pc::to_string(cfg.variant);
  out["opening_cost"] = cfg.opening_cost;
  out["n"] = space.size();
  out["solution"] = solution_json(sol);
  out["locally_optimal"] = local.locally_optimal;
  out["cost_estimate"] = pc::radii_cost_estimate(profile);
  if (c.project > 0) {
    out["pullback"] = solution_json(pc::evaluate_cost(x, sol.facilities, cfg));
  }
  emit(c, render_json(out));
}

void run_mst(const Common& c) {
  const auto x = load_input(c);
  json out{{"command", "mst"}};
  const auto space = working_space(c, x, out);
  const auto tree = pc::mst_exact(space);
  if (c.format == "csv") {
    std::string text = "u,v,length\n";
    for (const auto& [a, b] : tree.edges()) {
      text += std::to_string(a) + "," + std::to_string(b) + "," +
              pc::format_double(pc::distance(x, a, b)) + "\n";
    }
    emit(c, text);
    return;
  }
  json edges = json::array();
  for (const auto& [a, b] : tree.edges()) edges.push_back({a, b});
  out["n"] = space.size();
  out["edges"] = std::move(edges);
  out["cost"] = pc::tree_cost_in(tree, space);
  if (c.project > 0) {
    const double baseline = pc::tree_cost_in(pc::mst_exact(x), x);
    const double pulled = pc::tree_cost_in(tree, x);
    out["pullback_cost"] = pulled;
    out["baseline_cost"] = baseline;
    out["pullback_ratio"] = baseline > 0.0 ? pulled / baseline : 1.0;
    out["cost_ratio"] = baseline > 0.0 ? pc::tree_cost_in(tree, space) / baseline : 1.0;
  }
  emit(c, render_json(out));
}

void run_doubling(const Common& c, std::size_t centers, bool cache) {
  const auto x = load_input(c);
  json out{{"command", "doubling"}};
  const auto space = working_space(c, x, out);
  const auto est = pc::doubling_constant_estimate(space, {centers, c.seed, cache});
  if (c.format == "csv") {
    emit(c, "lambda_hat,ddim_hat,scales\n" + std::to_string(est.lambda_hat) + "," +
                pc::format_double(est.ddim_hat) + "," +
                std::to_string(est.scales_probed.size()) + "\n");
    return;
  }
  out["centers_sampled"] = centers;
  out["seed"] = c.seed;
  out["lambda_hat"] = est.lambda_hat;
  out["ddim_hat"] = est.ddim_hat;
  out["scales_probed"] = est.scales_probed;
  emit(c, render_json(out));
}

void run_optimum(const Common& c, std::size_t max_n) {
  const auto x = load_input(c);
  json out{{"command", "optimum"}};
  const auto space = working_space(c, x, out);
  const auto cfg = fl_config(c);
  const auto sol = pc::brute_force_optimum(space, cfg, max_n);
  out["variant"] = pc::to_string(cfg.variant);
  out["opening_cost"] = cfg.opening_cost;
  out["n"] = space.size();
  out["solution"] = solution_json(sol);
  emit(c, render_json(out));
}

void emit_report(const Common& c, const pc::ExperimentReport& report) {
  if (c.format == "csv") {
    emit(c, pc::records_to_csv(report));
  } else {
    emit(c, render_json(pc::to_json(report)));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random projections for facility location and MST clustering"};
  app.require_subcommand(1);
  Common c;
  GenArgs g;
  std::string task = "mst";
  std::vector<std::size_t> d_values{5, 10, 15, 20};
  std::size_t centers = 64;
  bool cache = false;
  std::size_t max_n = pc::kDefaultOptimumMaxN;
  std::string demo_kind;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--input", c.input, "Input CSV point file");
    sub->add_option("--output", c.output, "Write output here instead of stdout");
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--project", c.project, "Project to D dimensions first");
    sub->add_option("--seed", c.seed, "Seed for projection or generator");
    sub->add_option("--trials", c.trials, "Trials per dimension");
    sub->add_flag("--squared", c.squared, "Squared connection costs");
    sub->add_option("--epsilon", c.epsilon, "Relative error target");
    sub->add_option("--budget", c.budget, "Target number of open facilities");
    sub->add_option("--opening-cost", c.opening_cost, "Uniform opening cost");
  };

  std::vector<std::string> kind_names;
  for (auto name : pc::instance_kind_names()) kind_names.emplace_back(name);

  auto* gen = app.add_subcommand("gen", "Generate a synthetic instance as CSV");
  add_common(gen);
  gen->add_option("--kind", g.kind, "Instance kind")
      ->required()
      ->check(CLI::IsMember(kind_names));
  gen->add_option("--size", g.size, "Primary size parameter")->required();
  add_gen_options(gen, g);

  auto* radii = app.add_subcommand("radii", "Per-point facility radii");
  add_common(radii);
  auto* fl = app.add_subcommand("fl", "Mettu-Plaxton facility location");
  add_common(fl);
  auto* mst = app.add_subcommand("mst", "Exact Euclidean MST");
  add_common(mst);
  auto* doubling = app.add_subcommand("doubling", "Estimate the doubling constant");
  add_common(doubling);
  doubling->add_option("--centers", centers, "Number of sampled ball centers");
  doubling->add_flag("--cache-distances", cache, "Precompute all pairwise distances");
  auto* optimum = app.add_subcommand("optimum", "Exhaustive facility location optimum");
  add_common(optimum);
  optimum->add_option("--max-n", max_n, "Size guard");

  auto* experiment = app.add_subcommand("experiment", "Run an experiment");
  experiment->require_subcommand(1);
  auto* sweep = experiment->add_subcommand("ratio-sweep", "Pullback ratio versus d");
  add_common(sweep);
  sweep->add_option("--task", task, "fl | fl-squared | mst")
      ->check(CLI::IsMember({"fl", "fl-squared", "mst"}));
  sweep->add_option("--d-values", d_values, "Comma-separated target dimensions")
      ->delimiter(',');
  sweep->add_option("--kind", g.kind, "Generate the input instead of --input");
  sweep->add_option("--size", g.size, "Generator size");
  add_gen_options(sweep, g);
  auto* compare = experiment->add_subcommand(
      "doubling-compare", "Low versus high doubling dimension MST sweep");
  add_common(compare);
  compare->add_option("--size", g.size, "Points per dataset")->required();
  compare->add_option("--d-values", d_values, "Comma-separated target dimensions")
      ->delimiter(',');
  auto* demo = experiment->add_subcommand("counterexample", "Lower-bound constructions");
  add_common(demo);
  demo->add_option("--kind", demo_kind, "Construction")
      ->required()
      ->check(CLI::IsMember(
          {"fl-identity", "mst-star", "mst-grid", "walk", "kmeans-pairs"}));
  demo->add_option("--size", g.size, "Construction size")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*gen) {
      run_gen(c, g);
    } else if (*radii) {
      run_radii(c);
    } else if (*fl) {
      run_fl(c);
    } else if (*mst) {
      run_mst(c);
    } else if (*doubling) {
      run_doubling(c, centers, cache);
    } else if (*optimum) {
      run_optimum(c, max_n);
    } else if (*sweep) {
      pc::ExperimentConfig cfg;
      cfg.task = *pc::parse_task(task);
      cfg.d_values = d_values;
      cfg.trials = c.trials;
      cfg.base_seed = c.seed;
      cfg.epsilon_target = c.epsilon;
      if (c.budget > 0) cfg.facility_budget = c.budget;
      std::optional<pc::PointSet> input;
      if (!g.kind.empty()) {
        input = pc::generate(instance_spec(g, c.seed));
        cfg.input_label = g.kind + ":" + std::to_string(g.size);
      } else {
        input = load_input(c);
        cfg.input_label = c.input;
      }
      emit_report(c, pc::run_ratio_sweep(cfg, *input));
    } else if (*compare) {
      const auto result =
          pc::run_doubling_comparison(g.size, d_values, c.trials, c.seed, c.epsilon);
      if (c.format == "csv") {
        emit(c, pc::records_to_csv(result.low_doubling) +
                    pc::records_to_csv(result.high_doubling));
      } else {
        emit(c, render_json(pc::to_json(result)));
      }
    } else if (*demo) {
      if (c.project == 0) throw pc::InvalidInput("--project D is required");
      emit_report(c, pc::run_counterexample_demo(
                         *pc::parse_counterexample_kind(demo_kind), g.size,
                         c.project, c.trials, c.seed));
    }
  } catch (const pc::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
