#pragma once

#include <cstdint>
#include <optional>

#include "nodkit/vertex_map.hpp"

namespace nodkit {

struct SimplerOptions {
  std::size_t max_vertices = 16;  // size guard on g
};

struct SimplerResult {
  std::optional<SimplicialMap> witness;  // monotone simplicial surjection g -> h
  std::uint64_t nodes = 0;               // search nodes explored
};

// Exhaustive search for a monotone simplicial surjection g -> h, i.e. a
// partition of g into connected blocks whose quotient is h. Returns the
// lexicographically least assignment (g vertices in canonical order).
// Throws GuardError when g exceeds the vertex bound.
SimplerResult is_simpler(GraphPtr h, GraphPtr g, SimplerOptions opts = {});

}  // namespace nodkit
