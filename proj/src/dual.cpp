#include "nodkit/dual.hpp"

#include <algorithm>
#include <numeric>

#include "nodkit/error.hpp"
#include "nodkit/ids.hpp"

namespace nodkit {

namespace {

GraphPtr intersection_graph(const std::string& prefix, long first, std::size_t count,
                            const std::vector<std::vector<std::size_t>>& members_at_vertex) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back(indexed(prefix, first + static_cast<long>(i)));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& members : members_at_vertex)
    for (std::size_t x = 0; x < members.size(); ++x)
      for (std::size_t y = x + 1; y < members.size(); ++y)
        pairs.emplace_back(std::min(members[x], members[y]), std::max(members[x], members[y]));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<NamePair> edges;
  edges.reserve(pairs.size());
  for (auto [x, y] : pairs) edges.emplace_back(names[x], names[y]);
  return make_graph(std::move(names), edges);
}

}  // namespace

DualGraph dual_graph(GraphPtr g) {
  const Graph& G = *g;
  std::vector<std::vector<std::size_t>> at(G.vertex_count());
  for (std::size_t e = 0; e < G.edge_count(); ++e) {
    at[G.edge(e).a].push_back(e);
    at[G.edge(e).b].push_back(e);
  }
  DualGraph d;
  d.source = g;
  d.graph = intersection_graph("a", 1, G.edge_count(), at);
  d.star = G.edges();
  return d;
}

DualOfMap dual_of_map(const SimplicialMap& f) {
  const Graph& D = f.domain();
  const Graph& C = f.codomain();

  // Domain edges grouped by the codomain edges whose closure contains their image.
  std::vector<std::vector<std::size_t>> edges_over(C.edge_count());
  for (std::size_t i = 0; i < D.edge_count(); ++i) {
    Index x = f[D.edge(i).a], y = f[D.edge(i).b];
    if (x != y) {
      edges_over[*C.edge_index(x, y)].push_back(i);
    } else {
      for (Index z : C.neighbors(x)) edges_over[*C.edge_index(x, z)].push_back(i);
    }
  }

  std::vector<StarSubgraph> stars;
  std::vector<std::size_t> over;
  std::vector<Index> parent(D.vertex_count());
  for (std::size_t ce = 0; ce < C.edge_count(); ++ce) {
    const auto& es = edges_over[ce];
    std::vector<Index> verts;
    for (auto i : es) {
      verts.push_back(D.edge(i).a);
      verts.push_back(D.edge(i).b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (Index v : verts) parent[v] = v;
    auto find = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (auto i : es) {
      Index a = find(D.edge(i).a), b = find(D.edge(i).b);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    // Roots are least members since unions keep the smaller index as root.
    std::vector<Index> roots;
    for (Index v : verts)
      if (find(v) == v) roots.push_back(v);
    for (Index r : roots) {
      StarSubgraph s;
      for (Index v : verts)
        if (find(v) == r) s.vertices.push_back(v);
      for (auto i : es)
        if (find(D.edge(i).a) == r) s.edges.push_back(D.edge(i));
      std::sort(s.edges.begin(), s.edges.end());
      bool onto = false;
      for (const auto& e : s.edges)
        if (f[e.a] != f[e.b]) onto = true;
      if (!onto) continue;
      stars.push_back(std::move(s));
      over.push_back(ce);
    }
  }
  if (stars.empty()) throw DualError("dual of map is empty");

  std::vector<std::vector<std::size_t>> at(D.vertex_count());
  for (std::size_t k = 0; k < stars.size(); ++k)
    for (Index v : stars[k].vertices) at[v].push_back(k);
  GraphPtr graph;
  try {
    graph = intersection_graph("b", 0, stars.size(), at);
  } catch (const GraphError& e) {
    throw DualError(std::string("dual of map is not a graph: ") + e.what());
  }
  DualGraph target = dual_graph(f.codomain_ptr());
  std::vector<Index> image(over.begin(), over.end());
  SimplicialMap induced(graph, target.graph, std::move(image));
  return DualOfMap{graph, f.domain_ptr(), std::move(stars), std::move(over), std::move(target), std::move(induced)};
}

SimplicialMap d_pair(const SimplicialMap& f, const SimplicialMap& g) {
  if (!same_graph(g.codomain_ptr(), f.domain_ptr())) throw MapError("d_pair: codomain of g is not the domain of f");
  SimplicialMap fg = compose(f, g);
  DualOfMap top = dual_of_map(fg);
  DualOfMap mid = dual_of_map(f);

  std::vector<std::vector<std::size_t>> by_edge(f.codomain().edge_count());
  for (std::size_t w = 0; w < mid.star.size(); ++w) by_edge[mid.over[w]].push_back(w);

  std::vector<Index> image(top.star.size());
  for (std::size_t v = 0; v < top.star.size(); ++v) {
    std::vector<Index> gv;
    std::vector<Edge> ge;
    for (Index x : top.star[v].vertices) gv.push_back(g[x]);
    for (const auto& e : top.star[v].edges) {
      Index a = g[e.a], b = g[e.b];
      if (a != b) ge.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::vector<std::size_t> hits;
    for (std::size_t w : by_edge[top.over[v]]) {
      const auto& s = mid.star[w];
      bool inside = std::all_of(gv.begin(), gv.end(), [&](Index x) {
        return std::binary_search(s.vertices.begin(), s.vertices.end(), x);
      }) && std::all_of(ge.begin(), ge.end(), [&](const Edge& e) {
        return std::binary_search(s.edges.begin(), s.edges.end(), e);
      });
      if (inside) hits.push_back(w);
    }
    if (hits.empty()) throw DualError("d_pair: no starred subgraph contains g(" + top.graph->name(static_cast<Index>(v)) + "*)");
    if (hits.size() > 1) throw DualError("d_pair: containing starred subgraph for " + top.graph->name(static_cast<Index>(v)) + " is ambiguous");
    image[v] = static_cast<Index>(hits[0]);
  }
  try {
    return SimplicialMap(top.graph, mid.graph, std::move(image));
  } catch (const MapError& e) {
    throw DualError(std::string("d_pair: induced map not simplicial: ") + e.what());
  }
}

bool is_ultra_light(const SimplicialMap& f) {
  if (!is_light(f)) return false;
  DualOfMap d = dual_of_map(f);
  return std::all_of(d.star.begin(), d.star.end(), [](const StarSubgraph& s) { return s.edges.size() == 1; });
}

}  // namespace nodkit
