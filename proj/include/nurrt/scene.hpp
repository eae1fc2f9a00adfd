#pragma once

#include <string>
#include <variant>
#include <vector>

#include "nurrt/geometry.hpp"

namespace nurrt {

struct RectObstacle {
  Point2 min;
  Point2 max;
};

struct CircleObstacle {
  Point2 center;
  double radius = 0.0;
};

struct PolygonObstacle {
  std::vector<Point2> vertices;  // simple polygon, >= 3 vertices
};

using Obstacle = std::variant<RectObstacle, CircleObstacle, PolygonObstacle>;

// Continuous planning world. Obstacles are closed point sets; free space is
// the open complement intersected with the workspace [0,width]x[0,height].
struct Scene {
  double width = 0.0;
  double height = 0.0;
  std::vector<Obstacle> obstacles;
  Point2 start;
  Point2 goal;
};

// Closed-set membership test.
bool obstacle_contains(const Obstacle& obstacle, Point2 p);

// True iff the obstacle and the cell rectangle overlap with positive area.
// Grazing contact (shared edge or point) does not count as overlap.
bool obstacle_overlaps_rect(const Obstacle& obstacle, const Rect& cell);

Rect obstacle_bounds(const Obstacle& obstacle);

/// Parses and validates a scene file (JSON, schema in README).
/// Throws SceneError on malformed input or invariant violations.
Scene load_scene(const std::string& path);

/// Same as load_scene but from an in-memory JSON document.
Scene scene_from_json(const std::string& text);

// Throws SceneError if any scene invariant is violated.
void validate_scene(const Scene& scene);

// True iff p lies in the workspace and in no obstacle's closed point set.
bool point_is_free(const Scene& scene, Point2 p);

}  // namespace nurrt
