#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nurrt/collision.hpp"
#include "nurrt/partition.hpp"
#include "nurrt/rng.hpp"
#include "nurrt/scene.hpp"
#include "nurrt/tree.hpp"

namespace nurrt {

// Exploration bookkeeping. A region is explored iff exactly one tree node
// (its center sample) lies on it; start/goal nodes carry no region and are
// tracked by the group that contains them instead.
struct ExplorationState {
  SearchTree tree;
  std::vector<int> node_region;  // per node: region id, -1 for interior nodes
  std::vector<int> node_group;   // per node: group id for interior nodes, else -1
  std::vector<std::uint8_t> region_explored;
  int explored_count = 0;
  Rng rng;

  ExplorationState(Point2 start, int start_group, std::size_t n_regions,
                   std::uint64_t seed)
      : tree(start),
        node_region{-1},
        node_group{start_group},
        region_explored(n_regions, 0),
        rng(seed) {}
};

/// Unexplored regions adjacent to the tree: r_mn qualifies iff some node lies
/// on a region incident to group m or n, or is an interior node of C_m or
/// C_n. Returned sorted by region id.
std::vector<int> nearby_regions(const ExplorationState& state,
                                const RegionGraph& graph);

// Candidate set for a point on the given region: nodes on other regions
// incident to either of its groups plus interior nodes of those groups.
std::vector<int> vertices_near_region(const ExplorationState& state,
                                      const RegionGraph& graph, int region_id);

// Candidate set for a point interior to the given group: its interior nodes
// plus nodes on any region incident to it.
std::vector<int> vertices_near_group_interior(const ExplorationState& state,
                                              const RegionGraph& graph,
                                              int group_id);

/// Geometric dispatch: p on a region segment selects the region rule, p in a
/// group otherwise selects the interior rule (lowest id breaks ties).
/// Throws std::invalid_argument when p lies on no region and in no group.
std::vector<int> nearby_vertices(const ExplorationState& state,
                                 const Partition& partition,
                                 const RegionGraph& graph, Point2 p);

/// One exploration step: draws a region uniformly from nearby_regions with
/// the seeded generator, samples its center, connects and rewires through
/// vertices_near_region, and marks the region explored. Returns the new node
/// id, or nullopt when no nearby region remains.
std::optional<int> sample_step(ExplorationState& state,
                               const RegionGraph& graph);

struct ExploreResult {
  SearchTree tree;
  Path feasible;
  std::vector<int> waypoint_region;  // region of feasible[k+1], per interior waypoint
  std::vector<int> node_region;
  std::size_t iterations = 0;
};

/// Region-restricted exploration until the goal's group is reached. Performs
/// zero collision checks; every edge stays inside one convex group rectangle.
/// Throws NoPathError when the nearby set empties first or start/goal fall in
/// obstacle cells at this resolution.
ExploreResult explore(const Scene& scene, const Partition& partition,
                      const RegionGraph& graph, std::uint64_t seed);

/// Corner-point exploitation: layers are the start, the two endpoints of each
/// traversed region in path order, then the goal. Every forward pair gets a
/// collision-checked edge; returns the shortest start-to-goal path in that
/// graph, or nullopt when no such path exists (possible only under
/// conservative collision semantics).
std::optional<Path> exploit(const RegionGraph& graph, const Path& feasible,
                            std::span<const int> waypoint_region,
                            const SegmentChecker& checker);

struct PlanOptions {
  double cell_size = 2.0;
  std::uint64_t seed = 0;
  bool conservative_collision = false;
};

/// Full pipeline: rasterize, merge, extract regions, explore, exploit.
/// Collision checks are counted in the exploitation phase only; exploration
/// performs none.
PlanResult plan(const Scene& scene, const PlanOptions& options);

}  // namespace nurrt
