#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "nurrt/grid.hpp"

namespace nurrt {

// Maximal rectangle of merged free cells, inclusive index ranges.
struct CellGroup {
  int id = 0;
  int i0 = 0, i1 = 0;  // column range
  int j0 = 0, j1 = 0;  // row range

  int cell_count() const { return (i1 - i0 + 1) * (j1 - j0 + 1); }
  Rect rect(double cell_size) const {
    return {{i0 * cell_size, j0 * cell_size},
            {(i1 + 1) * cell_size, (j1 + 1) * cell_size}};
  }
};

struct Partition {
  OccupancyGrid grid;
  std::vector<CellGroup> groups;
  std::vector<std::int32_t> cell_to_group;  // -1 for obstacle cells
};

// Obstacle-free boundary segment shared by two adjacent groups. Endpoints are
// in meters, normalized so p0 <= p1 lexicographically; group_a < group_b.
struct CriticalRegion {
  int id = 0;
  int group_a = 0;
  int group_b = 0;
  Point2 p0;
  Point2 p1;
};

struct RegionGraph {
  std::vector<CriticalRegion> regions;
  std::vector<std::vector<int>> regions_of_group;  // group id -> region ids
};

/// Greedy rectangular merge of free cells.
///
/// Seeds are scanned row-major (j ascending, then i ascending). A group grows
/// one full row/column strip at a time; a side is growable iff every cell in
/// its strip is free and unmerged; the growable side maximizing the resulting
/// area wins, ties resolved in the order +i, -i, +j, -j. Growth stops when no
/// side is growable, and merged cells are never reassigned.
Partition merge_cells(const OccupancyGrid& grid);

/// One region per unordered pair of groups whose rectangles share a boundary
/// segment of positive length; corner contacts yield no region.
RegionGraph extract_regions(const Partition& partition);

// Id of the group whose closed rectangle contains p; lowest id wins when p
// sits on a shared boundary. nullopt when p lies only in obstacle cells.
std::optional<int> group_containing(const Partition& partition, Point2 p);

inline Point2 region_center(const CriticalRegion& r) {
  return lerp(r.p0, r.p1, 0.5);
}

// Endpoints in lexicographic order.
inline std::pair<Point2, Point2> region_endpoints(const CriticalRegion& r) {
  return {r.p0, r.p1};
}

inline int other_group(const CriticalRegion& r, int g) {
  return g == r.group_a ? r.group_b : r.group_a;
}

inline bool region_touches_group(const CriticalRegion& r, int g) {
  return r.group_a == g || r.group_b == g;
}

}  // namespace nurrt
