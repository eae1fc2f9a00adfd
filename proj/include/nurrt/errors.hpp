#pragma once

#include <stdexcept>
#include <string>

namespace nurrt {

// Scene file could not be parsed or violates a scene invariant.
struct SceneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Planner could not produce a start-to-goal path.
struct NoPathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace nurrt
