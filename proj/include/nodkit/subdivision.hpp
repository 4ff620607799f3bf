#pragma once

#include <map>
#include <string>
#include <vector>

#include "nodkit/graph.hpp"
#include "nodkit/report.hpp"
#include "nodkit/vertex_map.hpp"

namespace nodkit {

// fine refines coarse: each coarse edge e = {a < b} is replaced by the arc
// arcs[e], a vertex path in fine running from a to b.
struct Subdivision {
  GraphPtr fine;
  GraphPtr coarse;
  std::vector<std::vector<Index>> arcs;  // by coarse edge index, fine indices

  // Arc of the coarse edge {x, y}, oriented from x to y.
  Walk arc_of(std::string_view x, std::string_view y) const;
  // First fine edge of the arc of coarse edge e at coarse endpoint v.
  Edge germ(Index v, std::size_t e) const;
};

Subdivision identity_subdivision(GraphPtr g);

// Builds arcs from named walks keyed by coarse edges in either orientation.
Subdivision make_subdivision(GraphPtr fine, GraphPtr coarse, const std::vector<Walk>& arcs);

// Violation kinds "arc-endpoints", "arc-overlap", "arc-coverage",
// plus "arc-shape" for arcs that are not simple paths in fine.
Report check_subdivision(const Subdivision& s);

// Arcs of mid_over_coarse with every mid edge replaced by its fine arc.
Subdivision compose_subdivisions(const Subdivision& fine_over_mid, const Subdivision& mid_over_coarse);

struct SubdividedMap {
  SimplicialMap map;             // f': G1' -> s.fine
  Subdivision domain_refinement;  // G1' over domain(f)
};

// Replaces each non-degenerate domain edge {x < y} by fresh vertices
// "x~y#1", ..., "x~y#k" carried isomorphically onto the refined arc of its
// image edge. Throws SubdivisionError on invalid input or a name clash.
SubdividedMap subdivide_map(const SimplicialMap& f, const Subdivision& s);

class EdgeSelection {
 public:
  EdgeSelection(GraphPtr g, std::vector<std::vector<std::size_t>> select);
  static EdgeSelection from_names(GraphPtr g, const std::map<std::string, std::vector<NamePair>>& select);
  static EdgeSelection full_stars(GraphPtr g);

  const Graph& graph() const { return *graph_; }
  const GraphPtr& graph_ptr() const { return graph_; }
  const std::vector<std::size_t>& at(Index v) const { return select_[v]; }
  bool contains(Index v, std::size_t edge) const;
  EdgeSelection without(Index v, std::size_t edge) const;

 private:
  GraphPtr graph_;
  std::vector<std::vector<std::size_t>> select_;  // sorted edge indices per vertex
};

// Preservation of (s0, s1) by fprime, whose domain refines the
// graph carrying s1 via refinement. Violation kinds "germ" and "adjacent-pair".
Report check_preserves(const SimplicialMap& fprime, const Subdivision& refinement,
                       const EdgeSelection& s0, const EdgeSelection& s1);

// Consistency of lam: h1.fine -> D(f, G1') with selection s on G1, where
// refinement is G1' = domain(f) over G1. Violation kinds "isomorphism",
// "selected-germ" and "interior-star".
Report check_consistency(const SimplicialMap& f, const Subdivision& refinement, const EdgeSelection& s,
                         const Subdivision& h1, const VertexMap& lam);

}  // namespace nodkit
