#include "nodkit/vertex_map.hpp"

#include "nodkit/error.hpp"

namespace nodkit {

VertexMap::VertexMap(GraphPtr domain, GraphPtr codomain, std::vector<Index> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_->vertex_count())
    throw MapError("assignment size " + std::to_string(image_.size()) + " does not match domain");
  for (Index y : image_)
    if (y >= codomain_->vertex_count()) throw MapError("assignment value outside codomain");
}

VertexMap VertexMap::from_names(GraphPtr domain, GraphPtr codomain,
                                const std::map<std::string, std::string>& assignment) {
  std::vector<Index> image(domain->vertex_count());
  std::vector<char> set(domain->vertex_count(), 0);
  for (const auto& [x, y] : assignment) {
    auto dx = domain->find(x);
    if (!dx) throw MapError("assignment names unknown domain vertex " + x);
    auto cy = codomain->find(y);
    if (!cy) throw MapError("assignment value " + y + " is not a codomain vertex");
    image[*dx] = *cy;
    set[*dx] = 1;
  }
  for (Index v = 0; v < domain->vertex_count(); ++v)
    if (!set[v]) throw MapError("assignment missing vertex " + domain->name(v));
  return VertexMap(std::move(domain), std::move(codomain), std::move(image));
}

std::map<std::string, std::string> VertexMap::assignment() const {
  std::map<std::string, std::string> out;
  for (Index v = 0; v < image_.size(); ++v) out.emplace(domain_->name(v), codomain_->name(image_[v]));
  return out;
}

std::optional<std::size_t> VertexMap::first_nonsimplicial_edge() const {
  const auto& E = domain_->edges();
  for (std::size_t i = 0; i < E.size(); ++i) {
    Index x = image_[E[i].a], y = image_[E[i].b];
    if (x != y && !codomain_->adjacent(x, y)) return i;
  }
  return std::nullopt;
}

SimplicialMap::SimplicialMap(VertexMap m) : VertexMap(std::move(m)) {
  if (auto e = first_nonsimplicial_edge()) {
    auto [x, y] = domain_->edge_names(*e);
    throw MapError("edge {" + x + "," + y + "} sent to non-edge {" + image_of(x) + "," + image_of(y) + "}");
  }
}

SimplicialMap identity_map(GraphPtr g) {
  std::vector<Index> image(g->vertex_count());
  for (Index v = 0; v < image.size(); ++v) image[v] = v;
  return SimplicialMap(g, g, std::move(image));
}

bool is_light(const VertexMap& f) {
  for (const auto& e : f.domain().edges())
    if (f[e.a] == f[e.b]) return false;
  return true;
}

bool is_surjective(const VertexMap& f) {
  const Graph& C = f.codomain();
  std::vector<char> hitv(C.vertex_count(), 0), hite(C.edge_count(), 0);
  for (Index y : f.images()) hitv[y] = 1;
  for (const auto& e : f.domain().edges())
    if (f[e.a] != f[e.b])
      if (auto ce = C.edge_index(f[e.a], f[e.b])) hite[*ce] = 1;
  for (char c : hitv)
    if (!c) return false;
  for (char c : hite)
    if (!c) return false;
  return true;
}

MapProperties map_properties(const VertexMap& f) {
  MapProperties p;
  p.simplicial = f.is_simplicial();
  p.light = is_light(f);
  p.surjective = is_surjective(f);

  const Graph& D = f.domain();
  const Graph& C = f.codomain();
  bool mono = true;
  std::vector<std::size_t> edge_hits(C.edge_count(), 0);
  for (const auto& e : D.edges())
    if (f[e.a] != f[e.b])
      if (auto ce = C.edge_index(f[e.a], f[e.b]))
        if (++edge_hits[*ce] > 1) mono = false;
  if (mono) {
    // Count connected components of each fiber using only collapsed edges.
    std::vector<Index> parent(D.vertex_count());
    for (Index v = 0; v < parent.size(); ++v) parent[v] = v;
    auto find = [&](Index x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : D.edges())
      if (f[e.a] == f[e.b]) parent[find(e.a)] = find(e.b);
    std::vector<std::optional<Index>> root_of(C.vertex_count());
    for (Index v = 0; v < D.vertex_count() && mono; ++v) {
      Index r = find(v);
      auto& slot = root_of[f[v]];
      if (!slot) slot = r;
      else if (*slot != r) mono = false;
    }
  }
  p.monotone = mono;
  return p;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  if (!same_graph(g.codomain_ptr(), f.domain_ptr())) throw MapError("compose: codomain of g is not the domain of f");
  std::vector<Index> image(g.domain().vertex_count());
  for (Index v = 0; v < image.size(); ++v) image[v] = f[g[v]];
  return VertexMap(g.domain_ptr(), f.codomain_ptr(), std::move(image));
}

SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g) {
  return SimplicialMap(compose(static_cast<const VertexMap&>(f), static_cast<const VertexMap&>(g)));
}

}  // namespace nodkit
