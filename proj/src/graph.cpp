#include "nodkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nodkit/error.hpp"
#include "nodkit/ids.hpp"

namespace nodkit {

namespace {

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

std::string pair_text(const NamePair& e) { return "{" + e.first + "," + e.second + "}"; }

}  // namespace

Report validate_graph(const GraphData& g) {
  Report r;
  std::unordered_map<std::string, std::size_t> idx;
  for (const auto& v : g.vertices) {
    if (v.empty()) r.add("empty-identifier", "vertex with empty name");
    if (!idx.emplace(v, idx.size()).second) r.add("duplicate-vertex", v);
  }
  Dsu dsu(idx.size());
  std::size_t components = idx.size();
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : g.edges) {
    if (e.first == e.second) {
      r.add("self-loop", pair_text(e));
      continue;
    }
    auto a = idx.find(e.first), b = idx.find(e.second);
    if (a == idx.end() || b == idx.end()) {
      r.add("unknown-endpoint", pair_text(e));
      continue;
    }
    auto key = id_less(e.first, e.second) ? std::make_pair(e.first, e.second)
                                          : std::make_pair(e.second, e.first);
    if (!seen.insert(key).second) r.add("duplicate-edge", pair_text(e));
    if (dsu.unite(a->second, b->second)) --components;
  }
  if (components > 1) r.add("disconnected", std::to_string(components) + " components");
  return r;
}

Graph::Graph(const GraphData& data) { build(data.vertices, data.edges); }

Graph::Graph(std::vector<std::string> vertices, const std::vector<NamePair>& edges) {
  build(std::move(vertices), edges);
}

void Graph::build(std::vector<std::string> vertices, const std::vector<NamePair>& edges) {
  std::sort(vertices.begin(), vertices.end(), IdLess{});
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    if (vertices[i] == vertices[i + 1]) throw GraphError("duplicate-vertex: " + vertices[i]);
  names_ = std::move(vertices);
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw GraphError("empty-identifier");
    index_.emplace(names_[i], static_cast<Index>(i));
  }
  edges_.reserve(edges.size());
  for (const auto& e : edges) {
    auto a = find(e.first), b = find(e.second);
    if (!a || !b) throw GraphError("unknown-endpoint: " + pair_text(e));
    if (*a == *b) throw GraphError("self-loop: " + pair_text(e));
    edges_.push_back(Edge{std::min(*a, *b), std::max(*a, *b)});
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
    if (edges_[i] == edges_[i + 1]) throw GraphError("duplicate-edge: " + pair_text(edge_names(i)));

  std::vector<std::size_t> deg(names_.size(), 0);
  for (const auto& e : edges_) {
    ++deg[e.a];
    ++deg[e.b];
  }
  off_.assign(names_.size() + 1, 0);
  for (std::size_t v = 0; v < names_.size(); ++v) off_[v + 1] = off_[v] + deg[v];
  nbr_.assign(off_.back(), 0);
  nbr_edge_.assign(off_.back(), 0);
  std::vector<std::size_t> fill(off_.begin(), off_.end() - 1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    nbr_[fill[e.a]] = e.b;
    nbr_edge_[fill[e.a]++] = i;
    nbr_[fill[e.b]] = e.a;
    nbr_edge_[fill[e.b]++] = i;
  }
  // Edges are sorted by (a,b), so b-lists are sorted; a-lists need a sort.
  for (std::size_t v = 0; v < names_.size(); ++v) {
    std::vector<std::pair<Index, std::size_t>> tmp;
    for (std::size_t k = off_[v]; k < off_[v + 1]; ++k) tmp.emplace_back(nbr_[k], nbr_edge_[k]);
    std::sort(tmp.begin(), tmp.end());
    for (std::size_t k = 0; k < tmp.size(); ++k) {
      nbr_[off_[v] + k] = tmp[k].first;
      nbr_edge_[off_[v] + k] = tmp[k].second;
    }
  }

  if (!names_.empty()) {
    std::vector<char> seen(names_.size(), 0);
    std::vector<Index> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      Index v = stack.back();
      stack.pop_back();
      for (Index w : neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    if (count != names_.size()) throw GraphError("disconnected");
  }
}

std::optional<Index> Graph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Index Graph::at(std::string_view name) const {
  auto v = find(name);
  if (!v) throw GraphError("unknown vertex: " + std::string(name));
  return *v;
}

std::optional<std::size_t> Graph::edge_index(Index x, Index y) const {
  if (x >= names_.size() || y >= names_.size()) return std::nullopt;
  auto first = nbr_.begin() + static_cast<std::ptrdiff_t>(off_[x]);
  auto last = nbr_.begin() + static_cast<std::ptrdiff_t>(off_[x + 1]);
  auto it = std::lower_bound(first, last, y);
  if (it == last || *it != y) return std::nullopt;
  return nbr_edge_[static_cast<std::size_t>(it - nbr_.begin())];
}

std::size_t Graph::edge_at(std::string_view x, std::string_view y) const {
  auto e = edge_index(at(x), at(y));
  if (!e) throw GraphError("no edge {" + std::string(x) + "," + std::string(y) + "}");
  return *e;
}

GraphData Graph::data() const {
  GraphData d;
  d.vertices = names_;
  for (std::size_t i = 0; i < edges_.size(); ++i) d.edges.push_back(edge_names(i));
  return d;
}

bool is_walk(const Graph& g, const Walk& w) {
  if (w.empty()) return false;
  std::optional<Index> prev;
  for (const auto& name : w) {
    auto v = g.find(name);
    if (!v) return false;
    if (prev && !g.adjacent(*prev, *v)) return false;
    prev = v;
  }
  return true;
}

std::vector<Index> walk_indices(const Graph& g, const Walk& w) {
  std::vector<Index> out;
  out.reserve(w.size());
  for (const auto& name : w) out.push_back(g.at(name));
  return out;
}

Walk walk_names(const Graph& g, const std::vector<Index>& w) {
  Walk out;
  out.reserve(w.size());
  for (Index v : w) out.push_back(g.name(v));
  return out;
}

}  // namespace nodkit
