#pragma once

#include <cstddef>
#include <vector>

#include "nurrt/grid.hpp"

namespace nurrt {

struct CellIndex {
  int i = 0;
  int j = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

/// Supercover of the segment [a,b]: every cell whose closed square the
/// segment intersects, ordered by first touch (ties by ascending i, then j).
/// A pass exactly through a lattice corner includes all four incident cells.
std::vector<CellIndex> cells_traversed(const OccupancyGrid& grid, Point2 a,
                                       Point2 b);

/// Default semantics: collides iff some point of the segment (endpoints
/// included) lies in the interior of the union of obstacle cells. Grazing the
/// face between a free and an obstacle cell or touching a corner is free;
/// the seam between two obstacle cells is interior to the union and blocks.
/// With conservative=true a segment touching any closed obstacle cell
/// collides.
bool segment_collides(const OccupancyGrid& grid, Point2 a, Point2 b,
                      bool conservative = false);

// Counting wrapper; every collides() call is one collision check.
class SegmentChecker {
 public:
  explicit SegmentChecker(const OccupancyGrid& grid, bool conservative = false)
      : grid_(&grid), conservative_(conservative) {}

  bool collides(Point2 a, Point2 b) const {
    ++count_;
    return segment_collides(*grid_, a, b, conservative_);
  }

  std::size_t checks() const { return count_; }
  void reset() { count_ = 0; }
  const OccupancyGrid& grid() const { return *grid_; }
  bool conservative() const { return conservative_; }

 private:
  const OccupancyGrid* grid_;
  bool conservative_;
  mutable std::size_t count_ = 0;
};

}  // namespace nurrt
