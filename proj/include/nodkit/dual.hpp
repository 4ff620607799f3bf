#pragma once

#include <vector>

#include "nodkit/graph.hpp"
#include "nodkit/vertex_map.hpp"

namespace nodkit {

// D(G): one vertex a1, a2, ... per edge of G in canonical edge order.
struct DualGraph {
  GraphPtr graph;
  GraphPtr source;
  std::vector<Edge> star;  // dual vertex index -> source edge
};

DualGraph dual_graph(GraphPtr g);

struct StarSubgraph {
  std::vector<Index> vertices;  // sorted, domain indices
  std::vector<Edge> edges;      // sorted, domain indices
  friend bool operator==(const StarSubgraph&, const StarSubgraph&) = default;
};

// D(f, G1): one vertex b0, b1, ... per component of f^{-1}(e) mapping onto e,
// ordered by (codomain edge, least vertex of the component).
struct DualOfMap {
  GraphPtr graph;
  GraphPtr source;                  // domain of f
  std::vector<StarSubgraph> star;   // dual vertex index -> starred subgraph
  std::vector<std::size_t> over;    // dual vertex index -> codomain edge
  DualGraph target;                 // D(codomain of f)
  SimplicialMap induced;            // d[f]: graph -> target.graph
};

// Throws DualError if the result is empty or disconnected (only possible for
// maps that collapse edges).
DualOfMap dual_of_map(const SimplicialMap& f);

// d[f, g]: vertex v of D(f o g, G2) goes to the unique w of D(f, G1) with
// g(v*) inside w*. Throws MapError on a non-composable pair and DualError if
// containment fails or is ambiguous.
SimplicialMap d_pair(const SimplicialMap& f, const SimplicialMap& g);

bool is_ultra_light(const SimplicialMap& f);

}  // namespace nodkit
