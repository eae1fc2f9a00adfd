#include "nurrt/partition.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace nurrt {
namespace {

// Growth directions, in tie-break order.
enum Side { PlusI, MinusI, PlusJ, MinusJ };

struct Rectangle {
  int i0, i1, j0, j1;
};

bool strip_mergeable(const OccupancyGrid& grid,
                     const std::vector<std::int32_t>& owner,
                     const Rectangle& r, Side side) {
  switch (side) {
    case PlusI: {
      const int i = r.i1 + 1;
      if (i >= grid.n) return false;
      for (int j = r.j0; j <= r.j1; ++j)
        if (grid.occupied(i, j) || owner[grid.index(i, j)] >= 0) return false;
      return true;
    }
    case MinusI: {
      const int i = r.i0 - 1;
      if (i < 0) return false;
      for (int j = r.j0; j <= r.j1; ++j)
        if (grid.occupied(i, j) || owner[grid.index(i, j)] >= 0) return false;
      return true;
    }
    case PlusJ: {
      const int j = r.j1 + 1;
      if (j >= grid.n) return false;
      for (int i = r.i0; i <= r.i1; ++i)
        if (grid.occupied(i, j) || owner[grid.index(i, j)] >= 0) return false;
      return true;
    }
    default: {
      const int j = r.j0 - 1;
      if (j < 0) return false;
      for (int i = r.i0; i <= r.i1; ++i)
        if (grid.occupied(i, j) || owner[grid.index(i, j)] >= 0) return false;
      return true;
    }
  }
}

int strip_size(const Rectangle& r, Side side) {
  return (side == PlusI || side == MinusI) ? r.j1 - r.j0 + 1 : r.i1 - r.i0 + 1;
}

void grow(Rectangle& r, Side side) {
  switch (side) {
    case PlusI: ++r.i1; break;
    case MinusI: --r.i0; break;
    case PlusJ: ++r.j1; break;
    case MinusJ: --r.j0; break;
  }
}

}  // namespace

Partition merge_cells(const OccupancyGrid& grid) {
  Partition partition;
  partition.grid = grid;
  partition.cell_to_group.assign(grid.cells.size(), -1);
  auto& owner = partition.cell_to_group;

  for (int j = 0; j < grid.n; ++j) {
    for (int i = 0; i < grid.n; ++i) {
      if (grid.occupied(i, j) || owner[grid.index(i, j)] >= 0) continue;

      Rectangle rect{i, i, j, j};
      for (;;) {
        Side best{};
        int best_size = 0;
        for (const Side side : {PlusI, MinusI, PlusJ, MinusJ}) {
          if (!strip_mergeable(grid, owner, rect, side)) continue;
          const int size = strip_size(rect, side);
          if (size > best_size) {  // strict: earlier side wins ties
            best_size = size;
            best = side;
          }
        }
        if (best_size == 0) break;
        grow(rect, best);
      }

      const int id = static_cast<int>(partition.groups.size());
      partition.groups.push_back({id, rect.i0, rect.i1, rect.j0, rect.j1});
      for (int jj = rect.j0; jj <= rect.j1; ++jj)
        for (int ii = rect.i0; ii <= rect.i1; ++ii)
          owner[grid.index(ii, jj)] = id;
    }
  }
  return partition;
}

RegionGraph extract_regions(const Partition& partition) {
  const OccupancyGrid& grid = partition.grid;
  const auto& owner = partition.cell_to_group;

  // Collect adjacent group pairs from cell edges; rectangles touching along a
  // line always have edge-adjacent cells, corner contacts never do.
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < grid.n; ++j) {
    for (int i = 0; i < grid.n; ++i) {
      const int g = owner[grid.index(i, j)];
      if (g < 0) continue;
      if (i + 1 < grid.n) {
        const int h = owner[grid.index(i + 1, j)];
        if (h >= 0 && h != g) pairs.emplace_back(std::min(g, h), std::max(g, h));
      }
      if (j + 1 < grid.n) {
        const int h = owner[grid.index(i, j + 1)];
        if (h >= 0 && h != g) pairs.emplace_back(std::min(g, h), std::max(g, h));
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  RegionGraph graph;
  graph.regions_of_group.resize(partition.groups.size());
  const double s = grid.cell_size;
  for (const auto& [a, b] : pairs) {
    const Rect ra = partition.groups[a].rect(s);
    const Rect rb = partition.groups[b].rect(s);
    const double x0 = std::max(ra.min.x, rb.min.x);
    const double x1 = std::min(ra.max.x, rb.max.x);
    const double y0 = std::max(ra.min.y, rb.min.y);
    const double y1 = std::min(ra.max.y, rb.max.y);
    // Interiors are disjoint, so exactly one dimension is degenerate.
    if (x1 - x0 <= kGeomTol && y1 - y0 <= kGeomTol) continue;

    CriticalRegion region;
    region.id = static_cast<int>(graph.regions.size());
    region.group_a = a;
    region.group_b = b;
    region.p0 = {x0, y0};
    region.p1 = {x1, y1};
    if (lex_less(region.p1, region.p0)) std::swap(region.p0, region.p1);
    graph.regions_of_group[a].push_back(region.id);
    graph.regions_of_group[b].push_back(region.id);
    graph.regions.push_back(region);
  }
  return graph;
}

std::optional<int> group_containing(const Partition& partition, Point2 p) {
  const OccupancyGrid& grid = partition.grid;
  const double s = grid.cell_size;

  // p can lie in the closure of up to four cells when it sits on lattice
  // lines; the closure of a group is the union of its cells' closures.
  const auto candidates_for = [&](double v) {
    std::array<int, 2> out{-1, -1};
    const double base = v / s;
    const auto k = static_cast<int>(std::llround(base));
    if (std::abs(v - k * s) <= kGeomTol) {
      out[0] = k - 1;
      out[1] = k;
    } else {
      out[0] = static_cast<int>(std::floor(base));
    }
    return out;
  };

  int best = -1;
  for (const int i : candidates_for(p.x)) {
    if (i < 0 || i >= grid.n) continue;
    for (const int j : candidates_for(p.y)) {
      if (j < 0 || j >= grid.n) continue;
      const int g = partition.cell_to_group[grid.index(i, j)];
      if (g >= 0 && (best < 0 || g < best)) best = g;
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

}  // namespace nurrt
