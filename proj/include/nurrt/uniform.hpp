#pragma once

#include <cstdint>
#include <optional>

#include "nurrt/collision.hpp"
#include "nurrt/rng.hpp"
#include "nurrt/scene.hpp"
#include "nurrt/tree.hpp"

namespace nurrt {

struct UniformOptions {
  std::uint64_t seed = 0;
  std::size_t max_iters = 16000;
  double step = 5.0;        // max connection distance and neighbor radius
  double goal_bias = 0.05;  // probability of proposing the goal itself
  double goal_tol = 0.5;    // meters
  bool shrinking_ball = false;
  bool conservative_collision = false;
  int shortcut_budget = 250;
  // Stop as soon as the smoothed best path is at most this long. Used by the
  // benchmark's run-to-equal-quality protocol.
  std::optional<double> stop_at_smoothed_length;
};

/// Classic uniform-sampling RRT*: steer from the nearest node by at most
/// `step`, connect and rewire within the neighbor radius, keep improving
/// until max_iters. The returned smoothed path comes from shortcut_smooth
/// with the configured budget. Every segment collision test is counted.
/// Throws NoPathError when no goal connection exists within the budget.
PlanResult plan_uniform(const Scene& scene, const OccupancyGrid& grid,
                        const UniformOptions& options);

/// Random shortcutting: picks two points along the polyline and replaces the
/// stretch between them when the direct segment is collision-free and
/// strictly shorter. Output is collision-free and never longer than the
/// input.
Path shortcut_smooth(const SegmentChecker& checker, const Path& path, Rng& rng,
                     int budget);

}  // namespace nurrt
