#include "nurrt/nonuniform.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>

#include "nurrt/errors.hpp"

namespace nurrt {
namespace {

// True iff some tree node lies on a region incident to g, or is an interior
// node of g (only start/goal nodes are interior).
bool group_touched(const ExplorationState& state, const RegionGraph& graph,
                   int g) {
  for (int id = 0; id < state.tree.size(); ++id) {
    const int r = state.node_region[id];
    if (r >= 0) {
      if (region_touches_group(graph.regions[r], g)) return true;
    } else if (state.node_group[id] == g) {
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> nearby_regions(const ExplorationState& state,
                                const RegionGraph& graph) {
  std::vector<std::uint8_t> touched(graph.regions_of_group.size(), 0);
  std::vector<std::uint8_t> known(graph.regions_of_group.size(), 0);
  const auto is_touched = [&](int g) {
    if (!known[g]) {
      known[g] = 1;
      touched[g] = group_touched(state, graph, g) ? 1 : 0;
    }
    return touched[g] != 0;
  };

  std::vector<int> out;
  for (const CriticalRegion& region : graph.regions) {
    if (state.region_explored[region.id]) continue;
    if (is_touched(region.group_a) || is_touched(region.group_b)) {
      out.push_back(region.id);
    }
  }
  return out;  // regions scanned in id order, already sorted
}

std::vector<int> vertices_near_region(const ExplorationState& state,
                                      const RegionGraph& graph,
                                      int region_id) {
  const CriticalRegion& region = graph.regions[region_id];
  std::vector<int> out;
  for (int id = 0; id < state.tree.size(); ++id) {
    const int r = state.node_region[id];
    if (r >= 0) {
      if (r != region_id && (region_touches_group(graph.regions[r], region.group_a) ||
                             region_touches_group(graph.regions[r], region.group_b))) {
        out.push_back(id);
      }
    } else if (state.node_group[id] == region.group_a ||
               state.node_group[id] == region.group_b) {
      out.push_back(id);
    }
  }
  return out;
}

std::vector<int> vertices_near_group_interior(const ExplorationState& state,
                                              const RegionGraph& graph,
                                              int group_id) {
  std::vector<int> out;
  for (int id = 0; id < state.tree.size(); ++id) {
    const int r = state.node_region[id];
    if (r >= 0) {
      if (region_touches_group(graph.regions[r], group_id)) out.push_back(id);
    } else if (state.node_group[id] == group_id) {
      out.push_back(id);
    }
  }
  return out;
}

std::vector<int> nearby_vertices(const ExplorationState& state,
                                 const Partition& partition,
                                 const RegionGraph& graph, Point2 p) {
  for (const CriticalRegion& region : graph.regions) {
    if (on_segment(region.p0, region.p1, p)) {
      return vertices_near_region(state, graph, region.id);
    }
  }
  if (const auto g = group_containing(partition, p)) {
    return vertices_near_group_interior(state, graph, *g);
  }
  throw std::invalid_argument(
      "position lies on no critical region and in no cell group");
}

std::optional<int> sample_step(ExplorationState& state,
                               const RegionGraph& graph) {
  const std::vector<int> nearby = nearby_regions(state, graph);
  if (nearby.empty()) return std::nullopt;

  const int region_id = nearby[state.rng.uniform_index(nearby.size())];
  const Point2 center = region_center(graph.regions[region_id]);
  const std::vector<int> candidates =
      vertices_near_region(state, graph, region_id);

  // Every candidate shares a convex group rectangle with the new sample, so
  // edges need no collision checks.
  const auto inserted = choose_parent_and_rewire(
      state.tree, center, candidates,
      [](Point2, Point2) { return true; });
  if (!inserted) return std::nullopt;  // unreachable: candidates are nonempty

  state.node_region.push_back(region_id);
  state.node_group.push_back(-1);
  state.region_explored[region_id] = 1;
  ++state.explored_count;
  return inserted;
}

ExploreResult explore(const Scene& scene, const Partition& partition,
                      const RegionGraph& graph, std::uint64_t seed) {
  const auto start_group = group_containing(partition, scene.start);
  const auto goal_group = group_containing(partition, scene.goal);
  if (!start_group || !goal_group) {
    throw NoPathError(
        "start or goal falls in an obstacle cell at this resolution; "
        "try a smaller --cell-size");
  }

  ExplorationState state(scene.start, *start_group, graph.regions.size(),
                         seed);

  ExploreResult result{state.tree, {}, {}, {}, 0};
  if (*start_group == *goal_group) {
    // Same convex group: the direct segment is collision-free.
    if (nearly_equal(scene.start, scene.goal)) {
      result.feasible = {scene.start};
    } else {
      const int goal_id = state.tree.insert(scene.goal, 0);
      result.feasible = state.tree.backtrack(goal_id);
      state.node_region.push_back(-1);
      state.node_group.push_back(*goal_group);
    }
    result.tree = state.tree;
    result.node_region = state.node_region;
    return result;
  }

  for (;;) {
    const auto new_node = sample_step(state, graph);
    if (!new_node) {
      throw NoPathError(
          "exploration exhausted all nearby regions before reaching the "
          "goal's cell group; free space is disconnected at this resolution");
    }
    ++result.iterations;

    const CriticalRegion& sampled =
        graph.regions[state.node_region[*new_node]];
    if (!region_touches_group(sampled, *goal_group)) continue;

    // A sample landed on the goal group's boundary: connect the goal through
    // its interior rule (still no collision checks needed).
    const std::vector<int> candidates =
        vertices_near_group_interior(state, graph, *goal_group);
    const auto goal_id = choose_parent_and_rewire(
        state.tree, scene.goal, candidates,
        [](Point2, Point2) { return true; });
    state.node_region.push_back(-1);
    state.node_group.push_back(*goal_group);

    result.feasible = state.tree.backtrack(*goal_id);
    // Interior waypoints are region centers; record their regions in order.
    std::vector<int> chain;
    for (int v = *goal_id; v >= 0; v = state.tree.parent(v)) chain.push_back(v);
    std::reverse(chain.begin(), chain.end());
    for (std::size_t w = 1; w + 1 < chain.size(); ++w) {
      result.waypoint_region.push_back(state.node_region[chain[w]]);
    }
    result.tree = state.tree;
    result.node_region = state.node_region;
    return result;
  }
}

std::optional<Path> exploit(const RegionGraph& graph, const Path& feasible,
                            std::span<const int> waypoint_region,
                            const SegmentChecker& checker) {
  if (feasible.size() < 2) return feasible;

  // Layered corner-point graph: L0 = {start}, one layer with both endpoints
  // per traversed region in path order, last layer = {goal}.
  struct Vertex {
    Point2 p;
    int layer;
  };
  std::vector<Vertex> vertices;
  vertices.push_back({feasible.front(), 0});
  int layer = 1;
  for (const int region_id : waypoint_region) {
    const auto [e0, e1] = region_endpoints(graph.regions[region_id]);
    vertices.push_back({e0, layer});
    vertices.push_back({e1, layer});
    ++layer;
  }
  vertices.push_back({feasible.back(), layer});

  // Forward edges between all layer pairs; DP in layer order is shortest
  // path because every edge goes strictly forward.
  const std::size_t n = vertices.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> pred(n, -1);
  dist[0] = 0.0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (vertices[u].layer >= vertices[v].layer) continue;
      if (dist[u] == std::numeric_limits<double>::infinity()) continue;
      const double w = distance(vertices[u].p, vertices[v].p);
      if (dist[u] + w < dist[v] &&
          !checker.collides(vertices[u].p, vertices[v].p)) {
        dist[v] = dist[u] + w;
        pred[v] = static_cast<int>(u);
      }
    }
  }

  if (dist[n - 1] == std::numeric_limits<double>::infinity()) {
    return std::nullopt;  // only reachable under conservative semantics
  }

  Path out;
  for (int v = static_cast<int>(n - 1); v >= 0; v = pred[v]) {
    out.push_back(vertices[v].p);
    if (v == 0) break;
  }
  std::reverse(out.begin(), out.end());
  // Regions can share endpoints; drop zero-length hops.
  Path dedup;
  for (const Point2 p : out) {
    if (dedup.empty() || !nearly_equal(dedup.back(), p)) dedup.push_back(p);
  }
  return dedup;
}

PlanResult plan(const Scene& scene, const PlanOptions& options) {
  const auto t0 = std::chrono::steady_clock::now();

  const OccupancyGrid grid = rasterize(scene, options.cell_size);
  const Partition partition = merge_cells(grid);
  const RegionGraph graph = extract_regions(partition);

  ExploreResult explored = explore(scene, partition, graph, options.seed);

  const SegmentChecker checker(grid, options.conservative_collision);
  auto smoothed =
      exploit(graph, explored.feasible, explored.waypoint_region, checker);

  PlanResult result{
      std::move(explored.feasible), std::nullopt, std::move(explored.tree),
      0,  0, 0, 0.0, 0.0, std::nullopt, {}};
  result.tree_size = static_cast<std::size_t>(result.tree.size());
  result.iterations = explored.iterations;
  result.collision_checks = checker.checks();
  result.feasible_length = path_length(result.feasible);
  if (smoothed) {
    // The endpoint graph optimizes within the feasible path's homotopy
    // class; keep the feasible chain when it happens to be shorter.
    if (path_length(*smoothed) <= result.feasible_length + kGeomTol) {
      result.smoothed = std::move(*smoothed);
    } else {
      result.smoothed = result.feasible;
    }
    result.smoothed_length = path_length(*result.smoothed);
  }

  const auto t1 = std::chrono::steady_clock::now();
  result.elapsed_seconds = std::chrono::duration<double>(t1 - t0).count();
  return result;
}

}  // namespace nurrt
