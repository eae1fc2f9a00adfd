#include "nurrt/collision.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace nurrt {
namespace {

// Parameter-space tolerance when merging crossing values.
constexpr double kParamTol = 1e-12;

// Cell index range whose closed spans contain coordinate v: two cells when v
// sits on a lattice line (within kGeomTol), one otherwise. Unclamped.
void axis_range(double v, double cell_size, int& lo, int& hi) {
  const auto k = static_cast<int>(std::llround(v / cell_size));
  if (std::abs(v - k * cell_size) <= kGeomTol) {
    lo = k - 1;
    hi = k;
  } else {
    lo = hi = static_cast<int>(std::floor(v / cell_size));
  }
}

// Cells whose closed square contains q, clamped to the grid.
void cells_containing(const OccupancyGrid& grid, Point2 q,
                      std::vector<CellIndex>& out) {
  out.clear();
  int ilo, ihi, jlo, jhi;
  axis_range(q.x, grid.cell_size, ilo, ihi);
  axis_range(q.y, grid.cell_size, jlo, jhi);
  ilo = std::max(ilo, 0);
  jlo = std::max(jlo, 0);
  ihi = std::min(ihi, grid.n - 1);
  jhi = std::min(jhi, grid.n - 1);
  for (int j = jlo; j <= jhi; ++j)
    for (int i = ilo; i <= ihi; ++i) out.push_back({i, j});
}

// True when q is interior to the union of obstacle cells: every cell whose
// closed square contains q is an obstacle cell. Sides beyond the workspace
// count as blocked, so hugging an obstacle pressed against the border also
// collides.
bool blocked_point(const OccupancyGrid& grid, Point2 q) {
  int ilo, ihi, jlo, jhi;
  axis_range(q.x, grid.cell_size, ilo, ihi);
  axis_range(q.y, grid.cell_size, jlo, jhi);
  bool any_cell = false;
  for (int j = jlo; j <= jhi; ++j) {
    for (int i = ilo; i <= ihi; ++i) {
      if (i < 0 || i >= grid.n || j < 0 || j >= grid.n) continue;
      any_cell = true;
      if (!grid.occupied(i, j)) return false;
    }
  }
  return any_cell;
}

// Crossing parameters of the segment with all lattice lines, plus 0 and 1.
std::vector<double> lattice_crossings(const OccupancyGrid& grid, Point2 a,
                                      Point2 b) {
  std::vector<double> ts{0.0, 1.0};
  const double s = grid.cell_size;
  const auto add_axis = [&](double av, double bv) {
    const double dv = bv - av;
    if (dv == 0.0) return;  // parallel; grazing is handled by point checks
    const double lo = std::min(av, bv);
    const double hi = std::max(av, bv);
    const auto k_lo = static_cast<int>(std::ceil((lo - kGeomTol) / s));
    const auto k_hi = static_cast<int>(std::floor((hi + kGeomTol) / s));
    for (int k = k_lo; k <= k_hi; ++k) {
      const double t = (k * s - av) / dv;
      if (t > kParamTol && t < 1.0 - kParamTol) ts.push_back(t);
    }
  };
  add_axis(a.x, b.x);
  add_axis(a.y, b.y);
  std::sort(ts.begin(), ts.end());
  // Merge near-identical crossings (corner passes hit both axes at one t).
  std::vector<double> merged;
  for (const double t : ts) {
    if (merged.empty() || t - merged.back() > kParamTol) merged.push_back(t);
  }
  return merged;
}

}  // namespace

std::vector<CellIndex> cells_traversed(const OccupancyGrid& grid, Point2 a,
                                       Point2 b) {
  // Cell -> first parameter at which its closed square is touched.
  std::map<std::pair<int, int>, double> first_touch;
  std::vector<CellIndex> scratch;
  const auto touch = [&](Point2 q, double t) {
    cells_containing(grid, q, scratch);
    for (const CellIndex c : scratch) {
      auto [it, inserted] = first_touch.try_emplace({c.i, c.j}, t);
      if (!inserted && t < it->second) it->second = t;
    }
  };

  const std::vector<double> ts = lattice_crossings(grid, a, b);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    touch(lerp(a, b, ts[k]), ts[k]);
    if (k + 1 < ts.size()) {
      touch(lerp(a, b, 0.5 * (ts[k] + ts[k + 1])), ts[k]);
    }
  }

  std::vector<std::pair<double, CellIndex>> ordered;
  ordered.reserve(first_touch.size());
  for (const auto& [cell, t] : first_touch) {
    ordered.push_back({t, {cell.first, cell.second}});
  }
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    if (x.second.i != y.second.i) return x.second.i < y.second.i;
    return x.second.j < y.second.j;
  });

  std::vector<CellIndex> out;
  out.reserve(ordered.size());
  for (const auto& [t, cell] : ordered) out.push_back(cell);
  return out;
}

bool segment_collides(const OccupancyGrid& grid, Point2 a, Point2 b,
                      bool conservative) {
  if (conservative) {
    for (const CellIndex c : cells_traversed(grid, a, b)) {
      if (grid.occupied(c.i, c.j)) return true;
    }
    return false;
  }

  if (nearly_equal(a, b)) return blocked_point(grid, a);
  if (blocked_point(grid, a) || blocked_point(grid, b)) return true;

  // Between consecutive lattice crossings the segment stays inside one cell's
  // open interior or runs along one lattice line, so the midpoint of each
  // sub-segment decides whether that stretch is blocked.
  const std::vector<double> ts = lattice_crossings(grid, a, b);
  for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
    if (ts[k + 1] - ts[k] <= kParamTol) continue;
    if (blocked_point(grid, lerp(a, b, 0.5 * (ts[k] + ts[k + 1])))) {
      return true;
    }
  }
  return false;
}

}  // namespace nurrt
