#include "nurrt/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nurrt/bench.hpp"
#include "nurrt/errors.hpp"
#include "nurrt/nonuniform.hpp"
#include "nurrt/svg.hpp"
#include "nurrt/uniform.hpp"

namespace nurrt {
namespace {

struct PlanArgs {
  std::string scene_path;
  std::string planner = "nonuniform";
  double cell_size = 2.0;
  std::uint64_t seed = 0;
  std::string seeds_range;  // "A..B"
  std::size_t max_iters = 16000;
  double step = 5.0;
  double goal_bias = 0.05;
  double goal_tol = 0.5;
  bool shrinking_ball = false;
  bool conservative = false;
  std::string svg_path;
  std::string metrics_path;
  std::string dump_partition_path;
  bool summary = false;
};

std::vector<std::uint64_t> parse_seeds(const PlanArgs& args) {
  if (args.seeds_range.empty()) return {args.seed};
  const auto sep = args.seeds_range.find("..");
  if (sep == std::string::npos) {
    throw CLI::ValidationError("--seeds", "expected A..B");
  }
  const std::uint64_t lo = std::stoull(args.seeds_range.substr(0, sep));
  const std::uint64_t hi = std::stoull(args.seeds_range.substr(sep + 2));
  if (hi < lo) throw CLI::ValidationError("--seeds", "range is empty");
  std::vector<std::uint64_t> seeds;
  for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  return seeds;
}

void dump_partition(const Partition& partition, const RegionGraph& graph,
                    const std::string& path) {
  nlohmann::json doc;
  doc["n"] = partition.grid.n;
  doc["cell_size"] = partition.grid.cell_size;
  doc["groups"] = nlohmann::json::array();
  for (const CellGroup& g : partition.groups) {
    doc["groups"].push_back({{"id", g.id},
                             {"i0", g.i0},
                             {"i1", g.i1},
                             {"j0", g.j0},
                             {"j1", g.j1}});
  }
  doc["regions"] = nlohmann::json::array();
  for (const CriticalRegion& r : graph.regions) {
    doc["regions"].push_back({{"id", r.id},
                              {"group_a", r.group_a},
                              {"group_b", r.group_b},
                              {"segment", {r.p0.x, r.p0.y, r.p1.x, r.p1.y}}});
  }
  std::ofstream out(path);
  if (!out) throw SceneError("cannot write partition dump: " + path);
  out << doc.dump(2) << "\n";
}

std::string svg_output_path(const std::string& base, const std::string& planner,
                            std::uint64_t seed, bool single_run) {
  if (single_run) return base;
  const auto dot = base.rfind('.');
  const std::string stem = dot == std::string::npos ? base : base.substr(0, dot);
  const std::string ext = dot == std::string::npos ? "" : base.substr(dot);
  return stem + "_" + planner + "_" + std::to_string(seed) + ext;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw SceneError("cannot write output file: " + path);
  out << content;
}

int run_plan(const PlanArgs& args, std::ostream& out, std::ostream& err) {
  const Scene scene = load_scene(args.scene_path);
  const OccupancyGrid grid = rasterize(scene, args.cell_size);
  const Partition partition = merge_cells(grid);
  const RegionGraph graph = extract_regions(partition);

  if (!args.dump_partition_path.empty()) {
    dump_partition(partition, graph, args.dump_partition_path);
  }

  std::vector<std::string> planners;
  if (args.planner == "both") {
    planners = {"nonuniform", "uniform"};
  } else {
    planners = {args.planner};
  }
  const std::vector<std::uint64_t> seeds = parse_seeds(args);
  const bool single_run = planners.size() == 1 && seeds.size() == 1;

  std::vector<std::string> lines;
  bool any_failed = false;
  for (const std::uint64_t seed : seeds) {
    for (const std::string& planner : planners) {
      CsvRow row;
      row.planner = planner;
      row.seed = seed;
      row.cell_size = args.cell_size;
      row.n_regions = graph.regions.size();
      std::optional<PlanResult> result;
      try {
        if (planner == "nonuniform") {
          result = plan(scene, {args.cell_size, seed, args.conservative});
        } else {
          UniformOptions options;
          options.seed = seed;
          options.max_iters = args.max_iters;
          options.step = args.step;
          options.goal_bias = args.goal_bias;
          options.goal_tol = args.goal_tol;
          options.shrinking_ball = args.shrinking_ball;
          options.conservative_collision = args.conservative;
          result = plan_uniform(scene, grid, options);
        }
      } catch (const NoPathError& e) {
        err << planner << " seed " << seed << ": " << e.what() << "\n";
        any_failed = true;
      }
      if (result) {
        row.tree_size = result->tree_size;
        row.iterations = result->iterations;
        row.collision_checks = result->collision_checks;
        row.time_ms = result->elapsed_seconds * 1e3;
        row.feasible_len = result->feasible_length;
        row.smoothed_len = result->smoothed_length;
        row.status = "ok";
        if (!args.svg_path.empty()) {
          write_file(svg_output_path(args.svg_path, planner, seed, single_run),
                     render_svg(scene, partition, graph, *result));
        }
      } else {
        row.status = "no-path";
      }
      lines.push_back(to_csv(row));
    }
  }

  std::ostringstream csv;
  csv << csv_header() << "\n";
  for (const std::string& line : lines) csv << line << "\n";
  if (!args.metrics_path.empty()) {
    write_file(args.metrics_path, csv.str());
  } else if (!args.summary) {
    out << csv.str();
  }

  if (args.summary) {
    // Aggregate the serialized values so the summary matches a re-parse of
    // the written file.
    std::vector<CsvRow> rows;
    for (const std::string& line : lines) rows.push_back(parse_csv_row(line));
    out << format_summary(summarize(rows));
  }
  return any_failed ? 3 : 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Non-uniform critical-region sampling benchmark for RRT*"};
  app.require_subcommand(1);

  PlanArgs plan_args;
  CLI::App* plan_cmd =
      app.add_subcommand("plan", "run a planner on a scene and emit metrics");
  plan_cmd->add_option("--scene", plan_args.scene_path, "scene JSON file")
      ->required();
  plan_cmd
      ->add_option("--planner", plan_args.planner,
                   "nonuniform, uniform, or both")
      ->check(CLI::IsMember({"nonuniform", "uniform", "both"}));
  plan_cmd->add_option("--cell-size", plan_args.cell_size,
                       "grid cell size in meters");
  auto* seed_opt = plan_cmd->add_option("--seed", plan_args.seed, "RNG seed");
  plan_cmd->add_option("--seeds", plan_args.seeds_range,
                       "inclusive seed range A..B")
      ->excludes(seed_opt);
  plan_cmd->add_option("--max-iters", plan_args.max_iters,
                       "uniform planner iteration budget");
  plan_cmd->add_option("--step", plan_args.step,
                       "uniform planner max connection distance (m)");
  plan_cmd->add_option("--goal-bias", plan_args.goal_bias,
                       "uniform planner goal sampling probability")
      ->check(CLI::Range(0.0, 0.999));
  plan_cmd->add_option("--goal-tol", plan_args.goal_tol,
                       "goal connection tolerance (m)");
  plan_cmd->add_flag("--shrinking-ball", plan_args.shrinking_ball,
                     "use the (log n / n)^(1/2) neighbor radius schedule");
  plan_cmd->add_flag("--conservative-collision", plan_args.conservative,
                     "treat touching an obstacle cell boundary as collision");
  plan_cmd->add_option("--svg", plan_args.svg_path, "render SVG to this path");
  plan_cmd->add_option("--metrics", plan_args.metrics_path,
                       "write CSV rows to this path");
  plan_cmd->add_option("--dump-partition", plan_args.dump_partition_path,
                       "write groups and regions as JSON");
  plan_cmd->add_flag("--summary", plan_args.summary,
                     "print per-planner summary table");

  std::string summarize_path;
  CLI::App* summarize_cmd =
      app.add_subcommand("summarize", "summarize an existing metrics CSV");
  summarize_cmd->add_option("--metrics", summarize_path, "CSV file to read")
      ->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (plan_cmd->parsed()) {
      return run_plan(plan_args, out, err);
    }
    std::ifstream in(summarize_path);
    if (!in) throw SceneError("cannot open metrics file: " + summarize_path);
    const std::vector<CsvRow> rows = read_csv(in);
    if (rows.empty()) throw SceneError("metrics file has no rows: " + summarize_path);
    out << format_summary(summarize(rows));
    return 0;
  } catch (const SceneError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace nurrt
