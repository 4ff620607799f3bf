#include "nodkit/simple_nod.hpp"

#include "nodkit/error.hpp"

namespace nodkit {

SimpleNOd recognize_simple_n_od(GraphPtr g, const std::optional<std::string>& branch_hint) {
  const Graph& G = *g;
  if (G.vertex_count() < 2) throw RecognitionError("needs at least one edge");
  if (!G.is_tree()) throw RecognitionError("graph has a cycle");

  std::optional<Index> branch;
  for (Index v = 0; v < G.vertex_count(); ++v) {
    if (G.degree(v) < 3) continue;
    if (branch) throw RecognitionError("two vertices of degree >= 3: " + G.name(*branch) + ", " + G.name(v));
    branch = v;
  }
  if (branch) {
    if (branch_hint && *branch_hint != G.name(*branch))
      throw RecognitionError("branch hint " + *branch_hint + " is not the branch point " + G.name(*branch));
  } else if (branch_hint) {
    branch = G.find(*branch_hint);
    if (!branch) throw RecognitionError("unknown branch hint " + *branch_hint);
  } else {
    for (Index v = 0; v < G.vertex_count() && !branch; ++v)
      if (G.degree(v) == 1) branch = v;
  }

  SimpleNOd od{g, G.name(*branch), {}};
  for (Index first : G.neighbors(*branch)) {
    Walk arm{G.name(*branch)};
    Index prev = *branch, cur = first;
    for (;;) {
      arm.push_back(G.name(cur));
      if (G.degree(cur) == 1) break;
      auto nb = G.neighbors(cur);
      Index next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    od.arms.push_back(std::move(arm));
  }
  return od;
}

}  // namespace nodkit
