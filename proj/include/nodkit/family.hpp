#pragma once

#include <string>
#include <vector>

#include "nodkit/dual.hpp"
#include "nodkit/simple_nod.hpp"
#include "nodkit/subdivision.hpp"
#include "nodkit/vertex_map.hpp"

namespace nodkit {

// Residue of x modulo n-2 taken in {1, ..., n-2}.
int residue(int x, int n);
// p(i) = i+1 for i < n-2, p(n-2) = 1.
int cyclic_successor(int i, int n);

std::string vname(int i);
std::string uname(int i);
std::string wname(int i);

struct FamilyBundle {
  int n;
  SimpleNOd x0;
  SimpleNOd x1;
  Subdivision x1_over_x0;
  SimplicialMap phi;      // x1 -> x0
  EdgeSelection selection;  // on x0
  Subdivision y1_over_x0;
  DualOfMap dual;         // D(phi, x1)
  SimplicialMap lambda;   // y1 -> dual.graph
};

FamilyBundle build_family(int n);  // throws PreconditionError for n < 3

// Row of the edge-inverse table: the preimage of <a_i, a_j> under d[phi].
struct EdgeInverse {
  int a_from;
  int a_to;
  std::vector<std::pair<int, int>> b_edges;
  bool supplemented = false;  // not listed in the closed-form rows, derived from the d-values
};

// Formula-level expectations for D(X0) and D(phi, X1), in the closed-form
// numbering (a_1..a_{n+2}, b_0..b_{n(n-3)+n+3}).
struct ExpectedDual {
  int n;
  std::vector<NamePair> x0_star;              // a_{k+1} -> edge of X0
  std::vector<std::pair<int, int>> x0_edges;  // a-index pairs
  std::vector<std::vector<NamePair>> star;    // b_k -> edges of X1
  std::vector<std::pair<int, int>> edges;     // b-index pairs
  std::vector<int> d;                         // b_k -> a-index
  std::vector<std::vector<int>> arcs;         // B^1..B^n as b-index walks
  std::vector<EdgeInverse> edge_inverses;
};

ExpectedDual expected_dual(int n);

// closed-form b_k -> computed dual vertex with the identical starred edge set.
// Throws DualError if this is not a bijection.
std::vector<Index> pin_numbering(const ExpectedDual& golden, const DualOfMap& dual);

}  // namespace nodkit
