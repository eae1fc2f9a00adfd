#include "nurrt/scene.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "nurrt/errors.hpp"

namespace nurrt {
namespace {

using nlohmann::json;

// Polygon area below this (m^2) counts as a degenerate sliver, not coverage.
constexpr double kAreaTol = 1e-9;

double shoelace_area(const std::vector<Point2>& poly) {
  double twice = 0.0;
  const std::size_t k = poly.size();
  for (std::size_t a = 0; a < k; ++a) {
    const Point2 p = poly[a];
    const Point2 q = poly[(a + 1) % k];
    twice += cross(p, q);
  }
  return 0.5 * twice;
}

// Clips a simple polygon to an axis-aligned rectangle (Sutherland–Hodgman).
// The enclosed area of the output equals the intersection area.
std::vector<Point2> clip_to_rect(std::vector<Point2> poly, const Rect& rect) {
  enum Side { Left, Right, Bottom, Top };
  for (int side = Left; side <= Top; ++side) {
    if (poly.empty()) break;
    std::vector<Point2> out;
    out.reserve(poly.size() + 4);
    auto inside = [&](Point2 p) {
      switch (side) {
        case Left: return p.x >= rect.min.x;
        case Right: return p.x <= rect.max.x;
        case Bottom: return p.y >= rect.min.y;
        default: return p.y <= rect.max.y;
      }
    };
    auto intersect = [&](Point2 a, Point2 b) {
      double t;
      switch (side) {
        case Left: t = (rect.min.x - a.x) / (b.x - a.x); break;
        case Right: t = (rect.max.x - a.x) / (b.x - a.x); break;
        case Bottom: t = (rect.min.y - a.y) / (b.y - a.y); break;
        default: t = (rect.max.y - a.y) / (b.y - a.y); break;
      }
      return lerp(a, b, t);
    };
    for (std::size_t a = 0; a < poly.size(); ++a) {
      const Point2 cur = poly[a];
      const Point2 prev = poly[(a + poly.size() - 1) % poly.size()];
      const bool cur_in = inside(cur);
      const bool prev_in = inside(prev);
      if (cur_in) {
        if (!prev_in) out.push_back(intersect(prev, cur));
        out.push_back(cur);
      } else if (prev_in) {
        out.push_back(intersect(prev, cur));
      }
    }
    poly = std::move(out);
  }
  return poly;
}

bool polygon_contains(const std::vector<Point2>& poly, Point2 p) {
  const std::size_t k = poly.size();
  for (std::size_t a = 0; a < k; ++a) {
    if (on_segment(poly[a], poly[(a + 1) % k], p)) return true;  // boundary
  }
  // Even-odd ray crossing; boundary cases were handled above.
  bool inside = false;
  for (std::size_t a = 0, b = k - 1; a < k; b = a++) {
    const Point2 va = poly[a];
    const Point2 vb = poly[b];
    if ((va.y > p.y) != (vb.y > p.y)) {
      const double xi = va.x + (p.y - va.y) / (vb.y - va.y) * (vb.x - va.x);
      if (p.x < xi) inside = !inside;
    }
  }
  return inside;
}

int orientation(Point2 a, Point2 b, Point2 c) {
  const double v = cross(b - a, c - a);
  if (std::abs(v) <= 1e-12) return 0;
  return v > 0 ? 1 : -1;
}

// Closed-segment intersection test, touching included.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orientation(a, b, c);
  const int o2 = orientation(a, b, d);
  const int o3 = orientation(c, d, a);
  const int o4 = orientation(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool polygon_self_intersects(const std::vector<Point2>& poly) {
  const std::size_t k = poly.size();
  for (std::size_t a = 0; a < k; ++a) {
    const Point2 pa = poly[a];
    const Point2 pb = poly[(a + 1) % k];
    if (nearly_equal(pa, pb)) return true;  // zero-length edge
    for (std::size_t b = a + 1; b < k; ++b) {
      const bool adjacent = (b == a + 1) || (a == 0 && b == k - 1);
      if (adjacent) continue;
      if (segments_intersect(pa, pb, poly[b], poly[(b + 1) % k])) return true;
    }
  }
  // A spike (edge folding back onto its predecessor) also self-overlaps.
  for (std::size_t a = 0; a < k; ++a) {
    const Point2 prev = poly[(a + k - 1) % k];
    const Point2 cur = poly[a];
    const Point2 next = poly[(a + 1) % k];
    if (orientation(prev, cur, next) == 0 && dot(cur - prev, next - cur) < 0)
      return true;
  }
  return false;
}

Point2 parse_point(const json& node, const std::string& what) {
  if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
      !node[1].is_number()) {
    throw SceneError(what + " must be a [x, y] number pair");
  }
  const Point2 p{node[0].get<double>(), node[1].get<double>()};
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw SceneError(what + " has a non-finite coordinate");
  }
  return p;
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed,
                  const std::string& what) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    bool known = false;
    for (const char* k : allowed) {
      if (key == k) {
        known = true;
        break;
      }
    }
    if (!known) throw SceneError("unknown field \"" + key + "\" in " + what);
  }
}

Obstacle parse_obstacle(const json& node, std::size_t idx) {
  const std::string what = "obstacles[" + std::to_string(idx) + "]";
  if (!node.is_object() || !node.contains("type")) {
    throw SceneError(what + " must be an object with a \"type\"");
  }
  const std::string type = node["type"].get<std::string>();
  if (type == "rect") {
    require_keys(node, {"type", "min", "max"}, what);
    RectObstacle r{parse_point(node.at("min"), what + ".min"),
                   parse_point(node.at("max"), what + ".max")};
    if (r.min.x >= r.max.x - kGeomTol || r.min.y >= r.max.y - kGeomTol) {
      throw SceneError(what + ": rect needs min < max componentwise");
    }
    return r;
  }
  if (type == "circle") {
    require_keys(node, {"type", "center", "radius"}, what);
    CircleObstacle c{parse_point(node.at("center"), what + ".center"),
                     node.at("radius").get<double>()};
    if (!std::isfinite(c.radius) || c.radius <= kGeomTol) {
      throw SceneError(what + ": circle needs radius > 0");
    }
    return c;
  }
  if (type == "polygon") {
    require_keys(node, {"type", "vertices"}, what);
    const json& verts = node.at("vertices");
    if (!verts.is_array() || verts.size() < 3) {
      throw SceneError(what + ": polygon needs at least 3 vertices");
    }
    PolygonObstacle poly;
    poly.vertices.reserve(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v) {
      poly.vertices.push_back(
          parse_point(verts[v], what + ".vertices[" + std::to_string(v) + "]"));
    }
    if (polygon_self_intersects(poly.vertices)) {
      throw SceneError(what + ": polygon is self-intersecting or degenerate");
    }
    if (std::abs(shoelace_area(poly.vertices)) <= kAreaTol) {
      throw SceneError(what + ": polygon has zero area");
    }
    return poly;
  }
  throw SceneError(what + ": unknown obstacle type \"" + type + "\"");
}

}  // namespace

bool obstacle_contains(const Obstacle& obstacle, Point2 p) {
  return std::visit(
      [&](const auto& o) -> bool {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          return Rect{o.min, o.max}.contains_closed(p);
        } else if constexpr (std::is_same_v<T, CircleObstacle>) {
          return distance(o.center, p) <= o.radius + kGeomTol;
        } else {
          return polygon_contains(o.vertices, p);
        }
      },
      obstacle);
}

bool obstacle_overlaps_rect(const Obstacle& obstacle, const Rect& cell) {
  return std::visit(
      [&](const auto& o) -> bool {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          const double w =
              std::min(o.max.x, cell.max.x) - std::max(o.min.x, cell.min.x);
          const double h =
              std::min(o.max.y, cell.max.y) - std::max(o.min.y, cell.min.y);
          return w > kGeomTol && h > kGeomTol;
        } else if constexpr (std::is_same_v<T, CircleObstacle>) {
          return rect_distance(cell, o.center) < o.radius - kGeomTol;
        } else {
          const auto clipped = clip_to_rect(o.vertices, cell);
          if (clipped.size() < 3) return false;
          return std::abs(shoelace_area(clipped)) > kAreaTol;
        }
      },
      obstacle);
}

Rect obstacle_bounds(const Obstacle& obstacle) {
  return std::visit(
      [](const auto& o) -> Rect {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, RectObstacle>) {
          return {o.min, o.max};
        } else if constexpr (std::is_same_v<T, CircleObstacle>) {
          return {{o.center.x - o.radius, o.center.y - o.radius},
                  {o.center.x + o.radius, o.center.y + o.radius}};
        } else {
          Rect b{o.vertices.front(), o.vertices.front()};
          for (const Point2 v : o.vertices) {
            b.min.x = std::min(b.min.x, v.x);
            b.min.y = std::min(b.min.y, v.y);
            b.max.x = std::max(b.max.x, v.x);
            b.max.y = std::max(b.max.y, v.y);
          }
          return b;
        }
      },
      obstacle);
}

Scene scene_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw SceneError(std::string("scene parse error: ") + e.what());
  }
  if (!doc.is_object()) throw SceneError("scene file must be a JSON object");
  require_keys(doc, {"width", "height", "start", "goal", "obstacles"},
               "scene");
  for (const char* key : {"width", "height", "start", "goal", "obstacles"}) {
    if (!doc.contains(key)) {
      throw SceneError(std::string("scene is missing \"") + key + "\"");
    }
  }

  Scene scene;
  scene.width = doc["width"].get<double>();
  scene.height = doc["height"].get<double>();
  scene.start = parse_point(doc["start"], "start");
  scene.goal = parse_point(doc["goal"], "goal");
  const json& obstacles = doc["obstacles"];
  if (!obstacles.is_array()) throw SceneError("obstacles must be an array");
  for (std::size_t idx = 0; idx < obstacles.size(); ++idx) {
    scene.obstacles.push_back(parse_obstacle(obstacles[idx], idx));
  }
  validate_scene(scene);
  return scene;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SceneError("cannot open scene file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return scene_from_json(buf.str());
}

void validate_scene(const Scene& scene) {
  if (!(scene.width > 0.0) || !(scene.height > 0.0) ||
      !std::isfinite(scene.width) || !std::isfinite(scene.height)) {
    throw SceneError("workspace dimensions must be positive");
  }
  if (std::abs(scene.width - scene.height) > kGeomTol) {
    throw SceneError("workspace must be square (width == height)");
  }
  for (const char* which : {"start", "goal"}) {
    const Point2 p = which[0] == 's' ? scene.start : scene.goal;
    if (!(p.x >= -kGeomTol && p.x <= scene.width + kGeomTol &&
          p.y >= -kGeomTol && p.y <= scene.height + kGeomTol)) {
      throw SceneError(std::string(which) + " lies outside the workspace");
    }
    if (!point_is_free(scene, p)) {
      throw SceneError(std::string(which) + " lies inside an obstacle");
    }
  }
}

bool point_is_free(const Scene& scene, Point2 p) {
  if (p.x < -kGeomTol || p.x > scene.width + kGeomTol || p.y < -kGeomTol ||
      p.y > scene.height + kGeomTol) {
    return false;
  }
  for (const Obstacle& obstacle : scene.obstacles) {
    if (obstacle_contains(obstacle, p)) return false;
  }
  return true;
}

}  // namespace nurrt
