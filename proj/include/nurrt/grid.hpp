#pragma once

#include <cstdint>
#include <vector>

#include "nurrt/geometry.hpp"
#include "nurrt/scene.hpp"

namespace nurrt {

// Square occupancy grid over [0, n*cell_size]^2. Cell (i,j) covers
// [i*cell_size,(i+1)*cell_size] x [j*cell_size,(j+1)*cell_size]; i indexes
// columns (x), j rows (y), both 0-based.
struct OccupancyGrid {
  int n = 0;
  double cell_size = 0.0;
  std::vector<std::uint8_t> cells;  // row-major j*n+i, 1 = obstacle

  bool occupied(int i, int j) const { return cells[index(i, j)] != 0; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j) * n + i;
  }
  bool in_bounds(int i, int j) const {
    return i >= 0 && i < n && j >= 0 && j < n;
  }
  Rect cell_rect(int i, int j) const {
    return {{i * cell_size, j * cell_size},
            {(i + 1) * cell_size, (j + 1) * cell_size}};
  }
  double extent() const { return n * cell_size; }

  std::size_t free_count() const;
};

/// Classifies every cell as free or obstacle. A cell is an obstacle cell iff
/// it is partially or fully covered by some obstacle (positive-area overlap;
/// a shared boundary alone does not occupy the cell).
/// Throws SceneError when scene.width / cell_size is not an integer
/// (tolerance 1e-9).
OccupancyGrid rasterize(const Scene& scene, double cell_size);

}  // namespace nurrt
