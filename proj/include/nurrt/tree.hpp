#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "nurrt/geometry.hpp"

namespace nurrt {

using Path = std::vector<Point2>;

// Sum of Euclidean segment lengths along the polyline.
double path_length(const Path& path);

// Rooted tree of samples; node 0 is the root and costs are path lengths from
// it. Single writer; snapshots may be shared read-only across threads.
class SearchTree {
 public:
  explicit SearchTree(Point2 root = Point2{});

  int size() const { return static_cast<int>(nodes_.size()); }
  Point2 position(int id) const { return nodes_[id].position; }
  int parent(int id) const { return nodes_[id].parent; }  // -1 for root
  double cost(int id) const { return nodes_[id].cost; }
  const std::vector<int>& children(int id) const { return children_[id]; }

  // Appends a node; cost derives from the parent.
  int insert(Point2 p, int parent_id);

  // Re-parents `id` and shifts the costs of its whole subtree.
  void reparent(int id, int new_parent);

  // Positions from the root to `id`.
  Path backtrack(int id) const;

  // Recomputed cost by walking parents; for consistency checks.
  double recomputed_cost(int id) const;

 private:
  struct Node {
    Point2 position;
    int parent = -1;
    double cost = 0.0;
  };
  std::vector<Node> nodes_;
  std::vector<std::vector<int>> children_;
};

// Node minimizing Euclidean distance to p; ties broken by lowest id.
int nearest(const SearchTree& tree, Point2 p);

using EdgePredicate = std::function<bool(Point2, Point2)>;

/// RRT*-style insertion: connects p to the cost-minimizing feasible candidate
/// (ties by lowest id), then re-parents every candidate whose cost strictly
/// decreases through the new node, updating descendant costs transitively.
/// Returns the new node id, or nullopt when no candidate edge passes edge_ok.
std::optional<int> choose_parent_and_rewire(SearchTree& tree, Point2 p,
                                            std::span<const int> candidates,
                                            const EdgePredicate& edge_ok);

struct PlanResult {
  Path feasible;
  std::optional<Path> smoothed;
  SearchTree tree;  // final search tree, for rendering
  std::size_t tree_size = 0;
  std::size_t iterations = 0;
  std::size_t collision_checks = 0;
  double elapsed_seconds = 0.0;
  double feasible_length = 0.0;
  std::optional<double> smoothed_length;
  std::vector<double> best_cost_trace;  // uniform planner: best cost per improvement
};

}  // namespace nurrt
