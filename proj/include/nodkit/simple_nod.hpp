#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodkit/graph.hpp"

namespace nodkit {

struct SimpleNOd {
  GraphPtr graph;
  std::string branch;
  std::vector<Walk> arms;  // each from the branch to a leaf

  std::size_t arm_count() const { return arms.size(); }
};

// Throws RecognitionError when g is not a simple-n-od (cycle, two branch
// points, a single vertex, or a hint that contradicts the unique branch).
SimpleNOd recognize_simple_n_od(GraphPtr g, const std::optional<std::string>& branch_hint = std::nullopt);

}  // namespace nodkit
