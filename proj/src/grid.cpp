#include "nurrt/grid.hpp"

#include <algorithm>
#include <cmath>

#include "nurrt/errors.hpp"

namespace nurrt {

std::size_t OccupancyGrid::free_count() const {
  std::size_t count = 0;
  for (const auto c : cells) count += (c == 0);
  return count;
}

OccupancyGrid rasterize(const Scene& scene, double cell_size) {
  if (!(cell_size > 0.0)) throw SceneError("cell size must be positive");
  const double ratio = scene.width / cell_size;
  const auto n = static_cast<int>(std::llround(ratio));
  if (n < 1 || std::abs(n * cell_size - scene.width) > kGeomTol) {
    throw SceneError("workspace width is not an integer multiple of the cell size");
  }

  OccupancyGrid grid;
  grid.n = n;
  grid.cell_size = cell_size;
  grid.cells.assign(static_cast<std::size_t>(n) * n, 0);

  for (const Obstacle& obstacle : scene.obstacles) {
    const Rect bounds = obstacle_bounds(obstacle);
    const int i_lo = std::max(0, static_cast<int>(std::floor((bounds.min.x - kGeomTol) / cell_size)));
    const int i_hi = std::min(n - 1, static_cast<int>(std::floor((bounds.max.x + kGeomTol) / cell_size)));
    const int j_lo = std::max(0, static_cast<int>(std::floor((bounds.min.y - kGeomTol) / cell_size)));
    const int j_hi = std::min(n - 1, static_cast<int>(std::floor((bounds.max.y + kGeomTol) / cell_size)));
    for (int j = j_lo; j <= j_hi; ++j) {
      for (int i = i_lo; i <= i_hi; ++i) {
        if (grid.cells[grid.index(i, j)]) continue;
        if (obstacle_overlaps_rect(obstacle, grid.cell_rect(i, j))) {
          grid.cells[grid.index(i, j)] = 1;
        }
      }
    }
  }
  return grid;
}

}  // namespace nurrt
