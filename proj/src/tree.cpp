#include "nurrt/tree.hpp"

#include <algorithm>
#include <limits>

namespace nurrt {

double path_length(const Path& path) {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    total += distance(path[k], path[k + 1]);
  }
  return total;
}

SearchTree::SearchTree(Point2 root) {
  nodes_.push_back({root, -1, 0.0});
  children_.emplace_back();
}

int SearchTree::insert(Point2 p, int parent_id) {
  const int id = size();
  nodes_.push_back({p, parent_id, nodes_[parent_id].cost +
                                      distance(nodes_[parent_id].position, p)});
  children_.emplace_back();
  children_[parent_id].push_back(id);
  return id;
}

void SearchTree::reparent(int id, int new_parent) {
  Node& node = nodes_[id];
  auto& siblings = children_[node.parent];
  siblings.erase(std::find(siblings.begin(), siblings.end(), id));
  node.parent = new_parent;
  children_[new_parent].push_back(id);

  const double new_cost =
      nodes_[new_parent].cost + distance(nodes_[new_parent].position, node.position);
  const double delta = new_cost - node.cost;

  // Shift the whole subtree.
  std::vector<int> stack{id};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    nodes_[v].cost += delta;
    for (const int c : children_[v]) stack.push_back(c);
  }
}

Path SearchTree::backtrack(int id) const {
  Path reversed;
  for (int v = id; v >= 0; v = nodes_[v].parent) {
    reversed.push_back(nodes_[v].position);
  }
  return {reversed.rbegin(), reversed.rend()};
}

double SearchTree::recomputed_cost(int id) const {
  double total = 0.0;
  for (int v = id; nodes_[v].parent >= 0; v = nodes_[v].parent) {
    total += distance(nodes_[v].position, nodes_[nodes_[v].parent].position);
  }
  return total;
}

int nearest(const SearchTree& tree, Point2 p) {
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int id = 0; id < tree.size(); ++id) {
    const double d = distance_sq(tree.position(id), p);
    if (d < best_d) {
      best_d = d;
      best = id;
    }
  }
  return best;
}

std::optional<int> choose_parent_and_rewire(SearchTree& tree, Point2 p,
                                            std::span<const int> candidates,
                                            const EdgePredicate& edge_ok) {
  // Cheapest feasible parent; candidates sorted by resulting cost so the
  // first edge that passes wins (ties fall to the lower id).
  std::vector<std::pair<double, int>> by_cost;
  by_cost.reserve(candidates.size());
  for (const int id : candidates) {
    by_cost.push_back({tree.cost(id) + distance(tree.position(id), p), id});
  }
  std::sort(by_cost.begin(), by_cost.end());

  int parent = -1;
  for (const auto& [cost, id] : by_cost) {
    if (edge_ok(tree.position(id), p)) {
      parent = id;
      break;
    }
  }
  if (parent < 0) return std::nullopt;

  const int inserted = tree.insert(p, parent);

  // Rewire: re-parent any candidate whose cost strictly drops through the new
  // node, in ascending id order.
  std::vector<int> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end());
  for (const int id : order) {
    if (id == parent) continue;
    const double through_new =
        tree.cost(inserted) + distance(p, tree.position(id));
    if (through_new < tree.cost(id) && edge_ok(p, tree.position(id))) {
      tree.reparent(id, inserted);
    }
  }
  return inserted;
}

}  // namespace nurrt
