#include "nurrt/uniform.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "nurrt/errors.hpp"

namespace nurrt {
namespace {

// Karaman–Frazzoli constant for d=2 with the free-space measure bounded by
// the workspace area.
double rrt_star_gamma(double area) {
  return 2.0 * std::sqrt(1.5 * area / 3.14159265358979323846);
}

struct GoalLink {
  int node = -1;
  double total = std::numeric_limits<double>::infinity();
};

// Best goal connection among nodes verified to reach the goal collision-free.
GoalLink best_goal_link(const SearchTree& tree, const std::vector<int>& nodes,
                        Point2 goal) {
  GoalLink best;
  for (const int id : nodes) {
    const double total = tree.cost(id) + distance(tree.position(id), goal);
    if (total < best.total) {
      best = {id, total};
    }
  }
  return best;
}

}  // namespace

Path shortcut_smooth(const SegmentChecker& checker, const Path& path, Rng& rng,
                     int budget) {
  if (path.size() < 3) return path;
  Path current = path;

  for (int iter = 0; iter < budget; ++iter) {
    // Cumulative arc lengths of the current polyline.
    std::vector<double> arc(current.size(), 0.0);
    for (std::size_t k = 1; k < current.size(); ++k) {
      arc[k] = arc[k - 1] + distance(current[k - 1], current[k]);
    }
    const double total = arc.back();
    if (total <= kGeomTol) break;

    double u1 = rng.uniform_real(0.0, total);
    double u2 = rng.uniform_real(0.0, total);
    if (u1 > u2) std::swap(u1, u2);

    const auto locate = [&](double u) {
      const auto it = std::upper_bound(arc.begin(), arc.end(), u);
      const std::size_t seg =
          std::min(current.size() - 2,
                   static_cast<std::size_t>(it - arc.begin()) - 1);
      const double seg_len = arc[seg + 1] - arc[seg];
      const double t = seg_len > 0.0 ? (u - arc[seg]) / seg_len : 0.0;
      return std::pair{seg, lerp(current[seg], current[seg + 1], t)};
    };
    const auto [seg1, p1] = locate(u1);
    const auto [seg2, p2] = locate(u2);
    if (seg1 == seg2) continue;  // same segment, nothing to cut

    const double saved = (u2 - u1) - distance(p1, p2);
    if (saved <= 1e-12) continue;
    if (checker.collides(p1, p2)) continue;

    Path next(current.begin(), current.begin() + seg1 + 1);
    if (!nearly_equal(next.back(), p1)) next.push_back(p1);
    if (!nearly_equal(next.back(), p2)) next.push_back(p2);
    for (std::size_t k = seg2 + 1; k < current.size(); ++k) {
      if (!nearly_equal(next.back(), current[k])) next.push_back(current[k]);
    }
    current = std::move(next);
  }
  return current;
}

PlanResult plan_uniform(const Scene& scene, const OccupancyGrid& grid,
                        const UniformOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&t0] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  const SegmentChecker checker(grid, options.conservative_collision);
  const auto edge_ok = [&checker](Point2 a, Point2 b) {
    return !checker.collides(a, b);
  };

  Rng rng(options.seed);
  Rng smooth_rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
  SearchTree tree(scene.start);
  const double gamma = rrt_star_gamma(scene.width * scene.height);

  std::vector<int> goal_connected;  // nodes with a verified goal edge
  std::vector<double> best_trace;
  double best_known = std::numeric_limits<double>::infinity();
  std::optional<Path> qualifying_smoothed;
  double last_smoothed_at = std::numeric_limits<double>::infinity();
  std::size_t iterations = 0;
  double stop_elapsed = -1.0;

  for (std::size_t iter = 0; iter < options.max_iters; ++iter) {
    ++iterations;

    Point2 sample;
    if (rng.uniform_real(0.0, 1.0) < options.goal_bias) {
      sample = scene.goal;
    } else {
      sample = {rng.uniform_real(0.0, scene.width),
                rng.uniform_real(0.0, scene.height)};
    }

    const int near_id = nearest(tree, sample);
    const Point2 near_p = tree.position(near_id);
    const double d = distance(near_p, sample);
    if (d <= kGeomTol) continue;
    const Point2 new_p =
        d <= options.step ? sample : lerp(near_p, sample, options.step / d);

    double radius = options.step;
    if (options.shrinking_ball) {
      const double m = static_cast<double>(tree.size()) + 1.0;
      radius = std::min(options.step, gamma * std::sqrt(std::log(m) / m));
    }
    std::vector<int> candidates;
    for (int id = 0; id < tree.size(); ++id) {
      if (distance_sq(tree.position(id), new_p) <= radius * radius) {
        candidates.push_back(id);
      }
    }
    if (candidates.empty()) candidates.push_back(near_id);

    const auto inserted =
        choose_parent_and_rewire(tree, new_p, candidates, edge_ok);
    if (!inserted) continue;  // sample unreachable, e.g. inside an obstacle

    if (distance(new_p, scene.goal) <= options.goal_tol &&
        (nearly_equal(new_p, scene.goal) ||
         !checker.collides(new_p, scene.goal))) {
      goal_connected.push_back(*inserted);
    }

    if (goal_connected.empty()) continue;
    const GoalLink best = best_goal_link(tree, goal_connected, scene.goal);
    if (best.total >= best_known - 1e-12) continue;
    best_known = best.total;
    best_trace.push_back(best_known);

    if (!options.stop_at_smoothed_length) continue;
    const double target = *options.stop_at_smoothed_length;
    if (best_known <= target) {
      stop_elapsed = elapsed();
      break;
    }
    // Re-smooth only after a meaningful improvement.
    if (best_known > 0.999 * last_smoothed_at) continue;
    last_smoothed_at = best_known;
    Path feasible = tree.backtrack(best.node);
    if (!nearly_equal(feasible.back(), scene.goal)) {
      feasible.push_back(scene.goal);
    }
    Rng probe_rng(options.seed ^ 0x6a09e667f3bcc909ULL);
    Path smoothed =
        shortcut_smooth(checker, feasible, probe_rng, options.shortcut_budget);
    if (path_length(smoothed) <= target) {
      qualifying_smoothed = std::move(smoothed);
      stop_elapsed = elapsed();
      break;
    }
  }

  if (goal_connected.empty()) {
    throw NoPathError("uniform RRT* found no path within the iteration budget");
  }

  const GoalLink best = best_goal_link(tree, goal_connected, scene.goal);
  Path feasible = tree.backtrack(best.node);
  if (!nearly_equal(feasible.back(), scene.goal)) {
    feasible.push_back(scene.goal);
  }

  Path smoothed;
  if (qualifying_smoothed) {
    smoothed = std::move(*qualifying_smoothed);
  } else {
    smoothed =
        shortcut_smooth(checker, feasible, smooth_rng, options.shortcut_budget);
  }

  PlanResult result{std::move(feasible),
                    std::nullopt,
                    std::move(tree),
                    0,
                    iterations,
                    0,
                    0.0,
                    0.0,
                    std::nullopt,
                    std::move(best_trace)};
  result.tree_size = static_cast<std::size_t>(result.tree.size());
  result.collision_checks = checker.checks();
  result.feasible_length = path_length(result.feasible);
  result.smoothed = std::move(smoothed);
  result.smoothed_length = path_length(*result.smoothed);
  result.elapsed_seconds = stop_elapsed >= 0.0 ? stop_elapsed : elapsed();
  return result;
}

}  // namespace nurrt
