#include "nodkit/simpler.hpp"

#include "nodkit/error.hpp"

namespace nodkit {

namespace {

struct Search {
  const Graph& H;
  const Graph& G;
  std::vector<Index> image;
  std::vector<int> vertex_hits;
  std::vector<int> edge_hits;
  std::size_t unhit_vertices;
  std::uint64_t nodes = 0;

  Search(const Graph& h, const Graph& g)
      : H(h), G(g), image(g.vertex_count()), vertex_hits(h.vertex_count(), 0),
        edge_hits(h.edge_count(), 0), unhit_vertices(h.vertex_count()) {}

  bool fibers_connected() const {
    std::vector<Index> parent(G.vertex_count());
    for (Index v = 0; v < parent.size(); ++v) parent[v] = v;
    auto find = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : G.edges())
      if (image[e.a] == image[e.b]) parent[find(e.a)] = find(e.b);
    std::vector<long> root(H.vertex_count(), -1);
    for (Index v = 0; v < G.vertex_count(); ++v) {
      long r = find(v);
      if (root[image[v]] < 0) root[image[v]] = r;
      else if (root[image[v]] != r) return false;
    }
    return true;
  }

  bool run(Index x) {
    ++nodes;
    if (x == G.vertex_count()) {
      if (unhit_vertices) return false;
      for (int c : edge_hits)
        if (c != 1) return false;
      return fibers_connected();
    }
    if (unhit_vertices > G.vertex_count() - x) return false;
    for (Index y = 0; y < H.vertex_count(); ++y) {
      bool ok = true;
      std::vector<std::size_t> touched;
      for (Index u : G.neighbors(x)) {
        if (u >= x || image[u] == y) continue;
        auto e = H.edge_index(image[u], y);
        if (!e || edge_hits[*e] > 0) {
          ok = false;
          break;
        }
        ++edge_hits[*e];
        touched.push_back(*e);
      }
      if (ok) {
        image[x] = y;
        if (vertex_hits[y]++ == 0) --unhit_vertices;
        if (run(x + 1)) return true;
        if (--vertex_hits[y] == 0) ++unhit_vertices;
      }
      for (auto e : touched) --edge_hits[e];
    }
    return false;
  }
};

}  // namespace

SimplerResult is_simpler(GraphPtr h, GraphPtr g, SimplerOptions opts) {
  if (g->vertex_count() > opts.max_vertices)
    throw GuardError("is_simpler: " + std::to_string(g->vertex_count()) + " vertices exceeds bound " +
                     std::to_string(opts.max_vertices));
  SimplerResult out;
  if (h->vertex_count() > g->vertex_count() || h->edge_count() > g->edge_count() || h->vertex_count() == 0) return out;
  Search s(*h, *g);
  if (s.run(0)) out.witness = SimplicialMap(g, h, s.image);
  out.nodes = s.nodes;
  return out;
}

}  // namespace nodkit
