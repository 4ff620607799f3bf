#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nodkit/graph.hpp"

namespace nodkit {

// Total vertex assignment between two graphs, not necessarily simplicial.
class VertexMap {
 public:
  VertexMap(GraphPtr domain, GraphPtr codomain, std::vector<Index> image);
  static VertexMap from_names(GraphPtr domain, GraphPtr codomain,
                              const std::map<std::string, std::string>& assignment);

  const Graph& domain() const { return *domain_; }
  const Graph& codomain() const { return *codomain_; }
  const GraphPtr& domain_ptr() const { return domain_; }
  const GraphPtr& codomain_ptr() const { return codomain_; }

  Index operator[](Index v) const { return image_[v]; }
  const std::vector<Index>& images() const { return image_; }
  const std::string& image_of(std::string_view v) const { return codomain_->name(image_[domain_->at(v)]); }
  std::map<std::string, std::string> assignment() const;

  // First domain edge whose endpoints land on distinct non-adjacent vertices.
  std::optional<std::size_t> first_nonsimplicial_edge() const;
  bool is_simplicial() const { return !first_nonsimplicial_edge(); }

  friend bool operator==(const VertexMap& x, const VertexMap& y) {
    return same_graph(x.domain_, y.domain_) && same_graph(x.codomain_, y.codomain_) && x.image_ == y.image_;
  }

 protected:
  GraphPtr domain_;
  GraphPtr codomain_;
  std::vector<Index> image_;
};

class SimplicialMap : public VertexMap {
 public:
  // Throws MapError if some edge is sent to a non-edge.
  explicit SimplicialMap(VertexMap m);
  SimplicialMap(GraphPtr domain, GraphPtr codomain, std::vector<Index> image)
      : SimplicialMap(VertexMap(std::move(domain), std::move(codomain), std::move(image))) {}
  static SimplicialMap from_names(GraphPtr domain, GraphPtr codomain,
                                  const std::map<std::string, std::string>& assignment) {
    return SimplicialMap(VertexMap::from_names(std::move(domain), std::move(codomain), assignment));
  }
};

SimplicialMap identity_map(GraphPtr g);

struct MapProperties {
  bool simplicial = false;
  bool light = false;
  bool monotone = false;
  bool surjective = false;
};

// monotone: every vertex fiber induces a connected subgraph and no codomain
// edge is the image of two domain edges.
MapProperties map_properties(const VertexMap& f);
bool is_light(const VertexMap& f);
bool is_surjective(const VertexMap& f);

// f after g. Throws MapError unless codomain(g) equals domain(f).
SimplicialMap compose(const SimplicialMap& f, const SimplicialMap& g);
VertexMap compose(const VertexMap& f, const VertexMap& g);

}  // namespace nodkit
