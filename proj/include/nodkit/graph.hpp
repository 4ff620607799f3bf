#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nodkit/report.hpp"

namespace nodkit {

using Index = std::uint32_t;

struct Edge {
  Index a;
  Index b;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using NamePair = std::pair<std::string, std::string>;

// Raw, unvalidated graph data as read from JSON or written by hand.
struct GraphData {
  std::vector<std::string> vertices;
  std::vector<NamePair> edges;
};

Report validate_graph(const GraphData& g);

// Finite simple connected graph. Vertices are indexed in canonical identifier
// order; edges are stored as (a < b) pairs sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(const GraphData& data);
  Graph(std::vector<std::string> vertices, const std::vector<NamePair>& edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(Index v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Index> find(std::string_view name) const;
  Index at(std::string_view name) const;

  std::span<const Index> neighbors(Index v) const {
    return {nbr_.data() + off_[v], nbr_.data() + off_[v + 1]};
  }
  std::size_t degree(Index v) const { return off_[v + 1] - off_[v]; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_[e]; }
  std::optional<std::size_t> edge_index(Index x, Index y) const;
  std::size_t edge_at(std::string_view x, std::string_view y) const;
  bool adjacent(Index x, Index y) const { return edge_index(x, y).has_value(); }
  NamePair edge_names(std::size_t e) const { return {names_[edges_[e].a], names_[edges_[e].b]}; }

  GraphData data() const;
  bool is_tree() const { return edges_.size() + 1 == names_.size(); }

  friend bool operator==(const Graph& x, const Graph& y) {
    return x.names_ == y.names_ && x.edges_ == y.edges_;
  }

 private:
  void build(std::vector<std::string> vertices, const std::vector<NamePair>& edges);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Index> index_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> off_{0};
  std::vector<Index> nbr_;
  std::vector<std::size_t> nbr_edge_;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr make_graph(std::vector<std::string> vertices, const std::vector<NamePair>& edges) {
  return std::make_shared<const Graph>(std::move(vertices), edges);
}

inline bool same_graph(const GraphPtr& x, const GraphPtr& y) { return x == y || *x == *y; }

// Walks are plain identifier sequences; consecutive entries must be adjacent
// in the host graph, immediate backtracking allowed.
using Walk = std::vector<std::string>;

bool is_walk(const Graph& g, const Walk& w);
std::vector<Index> walk_indices(const Graph& g, const Walk& w);
Walk walk_names(const Graph& g, const std::vector<Index>& w);

}  // namespace nodkit
