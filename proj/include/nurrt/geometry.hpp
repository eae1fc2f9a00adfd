#pragma once

#include <algorithm>
#include <cmath>

namespace nurrt {

// Absolute tolerance for all geometric comparisons, in meters.
inline constexpr double kGeomTol = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

inline double distance(Point2 a, Point2 b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double distance_sq(Point2 a, Point2 b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline Point2 lerp(Point2 a, Point2 b, double t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}

inline bool nearly_equal(Point2 a, Point2 b, double tol = kGeomTol) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

inline bool lex_less(Point2 a, Point2 b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

// Axis-aligned rectangle, closed point set [min, max].
struct Rect {
  Point2 min;
  Point2 max;

  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }

  bool contains_closed(Point2 p, double tol = kGeomTol) const {
    return p.x >= min.x - tol && p.x <= max.x + tol &&
           p.y >= min.y - tol && p.y <= max.y + tol;
  }

  bool contains_open(Point2 p, double tol = kGeomTol) const {
    return p.x > min.x + tol && p.x < max.x - tol &&
           p.y > min.y + tol && p.y < max.y - tol;
  }
};

// Distance from p to the closed rectangle (0 when inside).
inline double rect_distance(const Rect& r, Point2 p) {
  const double dx = std::max({r.min.x - p.x, 0.0, p.x - r.max.x});
  const double dy = std::max({r.min.y - p.y, 0.0, p.y - r.max.y});
  return std::hypot(dx, dy);
}

// Distance from p to the closed segment [a, b].
inline double segment_distance(Point2 a, Point2 b, Point2 p) {
  const double len2 = distance_sq(a, b);
  if (len2 == 0.0) return distance(a, p);
  double t = dot(p - a, b - a) / len2;
  t = std::clamp(t, 0.0, 1.0);
  return distance(lerp(a, b, t), p);
}

inline bool on_segment(Point2 a, Point2 b, Point2 p, double tol = kGeomTol) {
  return segment_distance(a, b, p) <= tol;
}

}  // namespace nurrt
