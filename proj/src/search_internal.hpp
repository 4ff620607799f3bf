#pragma once

#include <chrono>
#include <optional>

#include "nodkit/factoring.hpp"

namespace nodkit::detail {

struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;
  bool expired() const { return at && std::chrono::steady_clock::now() >= *at; }
};

struct Problem {
  const SimplicialMap& phi;
  Index anchor;               // codomain branch
  Index root;                 // domain root
  std::vector<Index> order;   // domain preorder from root
  std::vector<Index> parent;  // parent in the rooted domain (root: itself)
};

Problem make_problem(const SimplicialMap& phi);

// Turns a labelled tree into a Factorization. tparent[0] is ignored; vertex 0
// need not be the branch. branch must be a vertex of the tree.
Factorization make_factorization(const SimplicialMap& phi, const std::vector<Index>& tlabel,
                                 const std::vector<std::pair<Index, Index>>& tedges, Index branch,
                                 const std::vector<Index>& alpha);

SearchResult search_congruence(const Problem& p, const SearchOptions& opts, Deadline deadline);
SearchResult search_lift(const Problem& p, const SearchOptions& opts, Deadline deadline);

}  // namespace nodkit::detail
