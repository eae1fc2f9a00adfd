#include "nurrt/svg.hpp"

#include <cstdio>
#include <sstream>
#include <variant>

namespace nurrt {
namespace {

// Fixed formatting keeps identical inputs byte-identical.
std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Scene& scene, const Partition& partition,
                       const RegionGraph& graph, const PlanResult& result) {
  const double h = scene.height;
  const auto X = [&](double x) { return fmt(x); };
  const auto Y = [&](double y) { return fmt(h - y); };  // y points up

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "viewBox=\"0 0 " << fmt(scene.width) << " " << fmt(scene.height)
      << "\" width=\"640\" height=\"640\">\n";
  svg << "<rect class=\"workspace\" x=\"0\" y=\"0\" width=\""
      << fmt(scene.width) << "\" height=\"" << fmt(scene.height)
      << "\" fill=\"white\" stroke=\"black\" stroke-width=\"0.08\"/>\n";

  for (const Obstacle& obstacle : scene.obstacles) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, RectObstacle>) {
            svg << "<rect class=\"obstacle\" x=\"" << X(o.min.x) << "\" y=\""
                << Y(o.max.y) << "\" width=\"" << fmt(o.max.x - o.min.x)
                << "\" height=\"" << fmt(o.max.y - o.min.y)
                << "\" fill=\"#555555\"/>\n";
          } else if constexpr (std::is_same_v<T, CircleObstacle>) {
            svg << "<circle class=\"obstacle\" cx=\"" << X(o.center.x)
                << "\" cy=\"" << Y(o.center.y) << "\" r=\"" << fmt(o.radius)
                << "\" fill=\"#555555\"/>\n";
          } else {
            svg << "<polygon class=\"obstacle\" points=\"";
            for (std::size_t v = 0; v < o.vertices.size(); ++v) {
              if (v) svg << " ";
              svg << X(o.vertices[v].x) << "," << Y(o.vertices[v].y);
            }
            svg << "\" fill=\"#555555\"/>\n";
          }
        },
        obstacle);
  }

  for (const CellGroup& group : partition.groups) {
    const Rect r = group.rect(partition.grid.cell_size);
    svg << "<rect class=\"group\" x=\"" << X(r.min.x) << "\" y=\""
        << Y(r.max.y) << "\" width=\"" << fmt(r.width()) << "\" height=\""
        << fmt(r.height())
        << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"0.05\"/>\n";
  }

  for (const CriticalRegion& region : graph.regions) {
    svg << "<line class=\"region\" x1=\"" << X(region.p0.x) << "\" y1=\""
        << Y(region.p0.y) << "\" x2=\"" << X(region.p1.x) << "\" y2=\""
        << Y(region.p1.y)
        << "\" stroke=\"#e8a33d\" stroke-width=\"0.12\"/>\n";
  }

  for (int id = 1; id < result.tree.size(); ++id) {
    const Point2 a = result.tree.position(result.tree.parent(id));
    const Point2 b = result.tree.position(id);
    svg << "<line class=\"tree\" x1=\"" << X(a.x) << "\" y1=\"" << Y(a.y)
        << "\" x2=\"" << X(b.x) << "\" y2=\"" << Y(b.y)
        << "\" stroke=\"#3a6fd8\" stroke-width=\"0.08\"/>\n";
  }

  const auto polyline = [&](const Path& path, const char* cls,
                            const char* color, double width) {
    svg << "<polyline class=\"" << cls << "\" points=\"";
    for (std::size_t k = 0; k < path.size(); ++k) {
      if (k) svg << " ";
      svg << X(path[k].x) << "," << Y(path[k].y);
    }
    svg << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
        << fmt(width) << "\"/>\n";
  };
  if (!result.feasible.empty()) {
    polyline(result.feasible, "feasible", "#d33c3c", 0.16);
  }
  if (result.smoothed) {
    polyline(*result.smoothed, "smoothed", "#2f9e44", 0.16);
  }

  if (!result.feasible.empty()) {
    svg << "<circle class=\"endpoint\" cx=\"" << X(result.feasible.front().x)
        << "\" cy=\"" << Y(result.feasible.front().y)
        << "\" r=\"0.3\" fill=\"#d33c3c\"/>\n";
    svg << "<circle class=\"endpoint\" cx=\"" << X(result.feasible.back().x)
        << "\" cy=\"" << Y(result.feasible.back().y)
        << "\" r=\"0.3\" fill=\"#2f9e44\"/>\n";
  }

  svg << "</svg>\n";
  return svg.str();
}

}  // namespace nurrt
