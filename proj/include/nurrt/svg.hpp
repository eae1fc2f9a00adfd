#pragma once

#include <string>

#include "nurrt/partition.hpp"
#include "nurrt/scene.hpp"
#include "nurrt/tree.hpp"

namespace nurrt {

/// Deterministic SVG 1.1 document: obstacles filled, group rectangles
/// outlined, critical regions as segments, tree edges in blue, feasible path
/// in red, smoothed path in green. Identical inputs yield identical bytes.
std::string render_svg(const Scene& scene, const Partition& partition,
                       const RegionGraph& graph, const PlanResult& result);

}  // namespace nurrt
