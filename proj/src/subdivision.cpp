#include "nodkit/subdivision.hpp"

#include <algorithm>

#include "nodkit/dual.hpp"
#include "nodkit/error.hpp"

namespace nodkit {

namespace {

std::string edge_text(const Graph& g, std::size_t e) {
  auto [a, b] = g.edge_names(e);
  return "<" + a + "," + b + ">";
}

Edge norm(Index x, Index y) { return Edge{std::min(x, y), std::max(x, y)}; }

}  // namespace

Walk Subdivision::arc_of(std::string_view x, std::string_view y) const {
  std::size_t e = coarse->edge_at(x, y);
  Walk w = walk_names(*fine, arcs[e]);
  if (coarse->name(coarse->edge(e).a) != x) std::reverse(w.begin(), w.end());
  return w;
}

Edge Subdivision::germ(Index v, std::size_t e) const {
  const auto& arc = arcs[e];
  if (coarse->edge(e).a == v) return norm(arc[0], arc[1]);
  return norm(arc[arc.size() - 1], arc[arc.size() - 2]);
}

Subdivision identity_subdivision(GraphPtr g) {
  Subdivision s{g, g, {}};
  for (const auto& e : g->edges()) s.arcs.push_back({e.a, e.b});
  return s;
}

Subdivision make_subdivision(GraphPtr fine, GraphPtr coarse, const std::vector<Walk>& arcs) {
  Subdivision s{fine, coarse, std::vector<std::vector<Index>>(coarse->edge_count())};
  std::vector<char> set(coarse->edge_count(), 0);
  for (const auto& w : arcs) {
    if (w.size() < 2) throw SubdivisionError("arc needs two vertices");
    auto e = coarse->edge_index(coarse->at(w.front()), coarse->at(w.back()));
    if (!e) throw SubdivisionError("arc " + w.front() + ".." + w.back() + " does not span a coarse edge");
    auto idx = walk_indices(*fine, w);
    if (coarse->name(coarse->edge(*e).a) != w.front()) std::reverse(idx.begin(), idx.end());
    s.arcs[*e] = std::move(idx);
    set[*e] = 1;
  }
  for (std::size_t e = 0; e < set.size(); ++e)
    if (!set[e]) throw SubdivisionError("no arc for coarse edge " + edge_text(*coarse, e));
  return s;
}

Report check_subdivision(const Subdivision& s) {
  Report r;
  const Graph& F = *s.fine;
  const Graph& C = *s.coarse;
  if (s.arcs.size() != C.edge_count()) {
    r.add("arc-shape", "arc count " + std::to_string(s.arcs.size()) + " != coarse edge count");
    return r;
  }
  std::vector<char> coarse_name(F.vertex_count(), 0);
  for (const auto& v : C.names()) {
    if (auto f = F.find(v)) coarse_name[*f] = 1;
    else r.add("arc-endpoints", "coarse vertex " + v + " missing from fine graph");
  }
  std::vector<int> interior_uses(F.vertex_count(), 0);
  std::vector<char> vertex_seen(F.vertex_count(), 0), edge_seen(F.edge_count(), 0);
  for (std::size_t e = 0; e < C.edge_count(); ++e) {
    const auto& arc = s.arcs[e];
    if (arc.size() < 2) {
      r.add("arc-shape", "arc of " + edge_text(C, e) + " has fewer than two vertices");
      continue;
    }
    if (F.name(arc.front()) != C.name(C.edge(e).a) || F.name(arc.back()) != C.name(C.edge(e).b))
      r.add("arc-endpoints", "arc of " + edge_text(C, e) + " runs " + F.name(arc.front()) + ".." + F.name(arc.back()));
    std::vector<Index> sorted(arc);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      r.add("arc-shape", "arc of " + edge_text(C, e) + " repeats a vertex");
    for (std::size_t k = 0; k < arc.size(); ++k) {
      vertex_seen[arc[k]] = 1;
      if (k > 0) {
        auto fe = F.edge_index(arc[k - 1], arc[k]);
        if (!fe) r.add("arc-shape", "arc of " + edge_text(C, e) + " steps across non-edge " + F.name(arc[k - 1]) + "-" + F.name(arc[k]));
        else edge_seen[*fe] = 1;
      }
      if (k > 0 && k + 1 < arc.size()) {
        ++interior_uses[arc[k]];
        if (coarse_name[arc[k]])
          r.add("arc-overlap", "arc of " + edge_text(C, e) + " passes through coarse vertex " + F.name(arc[k]));
      }
    }
  }
  for (Index v = 0; v < F.vertex_count(); ++v) {
    if (interior_uses[v] > 1) r.add("arc-overlap", "vertex " + F.name(v) + " interior to " + std::to_string(interior_uses[v]) + " arcs");
    if (!vertex_seen[v] && !(coarse_name[v] && C.edge_count() == 0))
      r.add("arc-coverage", "vertex " + F.name(v) + " on no arc");
  }
  for (std::size_t fe = 0; fe < F.edge_count(); ++fe)
    if (!edge_seen[fe]) r.add("arc-coverage", "edge " + edge_text(F, fe) + " on no arc");
  return r;
}

Subdivision compose_subdivisions(const Subdivision& fine_over_mid, const Subdivision& mid_over_coarse) {
  if (!same_graph(fine_over_mid.coarse, mid_over_coarse.fine))
    throw SubdivisionError("compose_subdivisions: middle graphs differ");
  const Graph& M = *mid_over_coarse.fine;
  Subdivision out{fine_over_mid.fine, mid_over_coarse.coarse, {}};
  out.arcs.reserve(mid_over_coarse.arcs.size());
  for (const auto& marc : mid_over_coarse.arcs) {
    std::vector<Index> arc;
    for (std::size_t k = 0; k + 1 < marc.size(); ++k) {
      std::size_t me = *M.edge_index(marc[k], marc[k + 1]);
      const auto& piece = fine_over_mid.arcs[me];
      bool forward = M.edge(me).a == marc[k];
      std::size_t start = arc.empty() ? 0 : 1;
      for (std::size_t j = start; j < piece.size(); ++j) arc.push_back(forward ? piece[j] : piece[piece.size() - 1 - j]);
    }
    out.arcs.push_back(std::move(arc));
  }
  return out;
}

SubdividedMap subdivide_map(const SimplicialMap& f, const Subdivision& s) {
  if (!same_graph(s.coarse, f.codomain_ptr())) throw SubdivisionError("subdivision is not of the codomain");
  Report r = check_subdivision(s);
  if (!r.ok()) throw SubdivisionError("invalid subdivision: " + r.violations.front().kind + ": " + r.violations.front().detail);

  const Graph& D = f.domain();
  const Graph& C = f.codomain();
  std::vector<std::string> names = D.names();
  std::vector<Index> image_fine;  // parallel to names
  image_fine.reserve(names.size());
  for (Index v = 0; v < D.vertex_count(); ++v) image_fine.push_back(*s.fine->find(C.name(f[v])));

  std::vector<NamePair> edges;
  std::vector<std::vector<std::string>> arc_names;
  arc_names.reserve(D.edge_count());
  for (std::size_t i = 0; i < D.edge_count(); ++i) {
    Index x = D.edge(i).a, y = D.edge(i).b;
    if (f[x] == f[y]) {
      edges.emplace_back(D.name(x), D.name(y));
      arc_names.push_back({D.name(x), D.name(y)});
      continue;
    }
    std::size_t ce = *C.edge_index(f[x], f[y]);
    std::vector<Index> arc = s.arcs[ce];
    if (C.edge(ce).a != f[x]) std::reverse(arc.begin(), arc.end());
    std::string key = D.name(x) + "~" + D.name(y) + "#";
    std::vector<std::string> path{D.name(x)};
    for (std::size_t k = 1; k + 1 < arc.size(); ++k) {
      std::string fresh = key + std::to_string(k);
      if (D.find(fresh)) throw SubdivisionError("fresh vertex name " + fresh + " already in domain");
      names.push_back(fresh);
      image_fine.push_back(arc[k]);
      path.push_back(std::move(fresh));
    }
    path.push_back(D.name(y));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) edges.emplace_back(path[k], path[k + 1]);
    arc_names.push_back(std::move(path));
  }

  std::vector<std::pair<std::string, Index>> named;
  named.reserve(names.size());
  for (std::size_t k = 0; k < names.size(); ++k) named.emplace_back(names[k], image_fine[k]);
  GraphPtr g;
  try {
    g = make_graph(std::move(names), edges);
  } catch (const GraphError& e) {
    throw SubdivisionError(std::string("subdivided domain is not a graph: ") + e.what());
  }
  std::vector<Index> image(g->vertex_count());
  for (const auto& [name, y] : named) image[g->at(name)] = y;

  Subdivision refinement{g, f.domain_ptr(), {}};
  refinement.arcs.reserve(arc_names.size());
  for (const auto& path : arc_names) refinement.arcs.push_back(walk_indices(*g, path));
  return SubdividedMap{SimplicialMap(g, s.fine, std::move(image)), std::move(refinement)};
}

EdgeSelection::EdgeSelection(GraphPtr g, std::vector<std::vector<std::size_t>> select)
    : graph_(std::move(g)), select_(std::move(select)) {
  if (select_.size() != graph_->vertex_count()) throw SubdivisionError("edge selection size mismatch");
  for (Index v = 0; v < select_.size(); ++v) {
    auto& s = select_[v];
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) throw SubdivisionError("edge selection empty at " + graph_->name(v));
    for (auto e : s) {
      if (e >= graph_->edge_count()) throw SubdivisionError("edge selection names unknown edge");
      if (graph_->edge(e).a != v && graph_->edge(e).b != v)
        throw SubdivisionError("selected edge " + edge_text(*graph_, e) + " does not contain " + graph_->name(v));
    }
  }
}

EdgeSelection EdgeSelection::from_names(GraphPtr g, const std::map<std::string, std::vector<NamePair>>& select) {
  std::vector<std::vector<std::size_t>> sel(g->vertex_count());
  for (const auto& [v, edges] : select)
    for (const auto& [a, b] : edges) sel[g->at(v)].push_back(g->edge_at(a, b));
  return EdgeSelection(std::move(g), std::move(sel));
}

EdgeSelection EdgeSelection::full_stars(GraphPtr g) {
  std::vector<std::vector<std::size_t>> sel(g->vertex_count());
  for (std::size_t e = 0; e < g->edge_count(); ++e) {
    sel[g->edge(e).a].push_back(e);
    sel[g->edge(e).b].push_back(e);
  }
  return EdgeSelection(std::move(g), std::move(sel));
}

bool EdgeSelection::contains(Index v, std::size_t edge) const {
  return std::binary_search(select_[v].begin(), select_[v].end(), edge);
}

EdgeSelection EdgeSelection::without(Index v, std::size_t edge) const {
  auto sel = select_;
  sel[v].erase(std::remove(sel[v].begin(), sel[v].end(), edge), sel[v].end());
  return EdgeSelection(graph_, std::move(sel));
}

Report check_preserves(const SimplicialMap& fprime, const Subdivision& refinement,
                       const EdgeSelection& s0, const EdgeSelection& s1) {
  Report r;
  if (!same_graph(refinement.fine, fprime.domain_ptr())) r.add("shape", "refinement is not of fprime's domain");
  if (!same_graph(s0.graph_ptr(), fprime.codomain_ptr())) r.add("shape", "s0 is not on fprime's codomain");
  if (!same_graph(s1.graph_ptr(), refinement.coarse)) r.add("shape", "s1 is not on the refined graph");
  if (!r.ok()) return r;

  const Graph& F = fprime.domain();
  const Graph& C = fprime.codomain();
  const Graph& G1 = *refinement.coarse;
  auto selected_image = [&](Index v, const Edge& e) -> bool {
    Index x = fprime[e.a], y = fprime[e.b];
    if (x == y) return false;
    return s0.contains(fprime[v], *C.edge_index(x, y));
  };

  for (Index v = 0; v < G1.vertex_count(); ++v) {
    Index fv = F.at(G1.name(v));
    for (auto e : s1.at(v)) {
      Edge germ = refinement.germ(v, e);
      if (!selected_image(fv, germ))
        r.add("germ", "(" + G1.name(v) + "," + edge_text(G1, e) + ") -> " + C.name(fprime[germ.a]) + "-" +
                          C.name(fprime[germ.b]) + " not in S0(" + C.name(fprime[fv]) + ")");
    }
  }
  for (Index v = 0; v < F.vertex_count(); ++v) {
    std::vector<std::string> bad;
    for (Index w : F.neighbors(v))
      if (!selected_image(v, norm(v, w))) bad.push_back(F.name(w));
    if (bad.size() >= 2)
      r.add("adjacent-pair", "at " + F.name(v) + ": edges to " + bad[0] + " and " + bad[1] + " both leave S0(" +
                                 C.name(fprime[v]) + ")");
  }
  return r;
}

Report check_consistency(const SimplicialMap& f, const Subdivision& refinement, const EdgeSelection& s,
                         const Subdivision& h1, const VertexMap& lam) {
  Report r;
  if (!same_graph(refinement.fine, f.domain_ptr())) r.add("shape", "refinement is not of f's domain");
  if (!same_graph(h1.coarse, refinement.coarse)) r.add("shape", "h1 and refinement subdivide different graphs");
  if (!same_graph(s.graph_ptr(), refinement.coarse)) r.add("shape", "selection is not on the refined graph");
  if (!same_graph(lam.domain_ptr(), h1.fine)) r.add("shape", "lambda is not defined on h1");
  if (!r.ok()) return r;

  DualOfMap dual = dual_of_map(f);
  if (!same_graph(lam.codomain_ptr(), dual.graph)) {
    r.add("shape", "lambda does not map into the dual of f");
    return r;
  }

  const Graph& H = *h1.fine;
  const Graph& B = *dual.graph;
  std::vector<int> hits(B.vertex_count(), 0);
  for (Index y : lam.images()) ++hits[y];
  bool bijective = H.vertex_count() == B.vertex_count() && std::all_of(hits.begin(), hits.end(), [](int c) { return c == 1; });
  if (!bijective) r.add("isomorphism", "lambda is not a bijection on vertices");
  if (auto e = lam.first_nonsimplicial_edge()) {
    r.add("isomorphism", "edge " + edge_text(H, *e) + " not sent to an edge");
  } else if (bijective) {
    if (H.edge_count() != B.edge_count()) r.add("isomorphism", "edge counts differ");
    for (const auto& e : H.edges())
      if (lam[e.a] == lam[e.b]) r.add("isomorphism", "edge collapsed");
  }
  if (!r.ok()) return r;

  const Graph& G1 = *refinement.coarse;
  for (Index v = 0; v < G1.vertex_count(); ++v) {
    Index hv = H.at(G1.name(v));
    const auto& star = dual.star[lam[hv]];
    for (auto e : s.at(v)) {
      Edge germ = refinement.germ(v, e);
      if (!std::binary_search(star.edges.begin(), star.edges.end(), germ))
        r.add("selected-germ", "germ of " + edge_text(G1, e) + " at " + G1.name(v) + " not in " + B.name(lam[hv]) + "*");
    }
  }
  for (std::size_t e = 0; e < G1.edge_count(); ++e) {
    const auto& arc = refinement.arcs[e];
    std::vector<Index> av(arc);
    std::sort(av.begin(), av.end());
    std::vector<Edge> ae;
    for (std::size_t k = 0; k + 1 < arc.size(); ++k) ae.push_back(norm(arc[k], arc[k + 1]));
    std::sort(ae.begin(), ae.end());
    const auto& harc = h1.arcs[e];
    for (std::size_t k = 1; k + 1 < harc.size(); ++k) {
      const auto& star = dual.star[lam[harc[k]]];
      bool inside = std::includes(av.begin(), av.end(), star.vertices.begin(), star.vertices.end()) &&
                    std::includes(ae.begin(), ae.end(), star.edges.begin(), star.edges.end());
      if (!inside)
        r.add("interior-star", B.name(lam[harc[k]]) + "* (image of " + H.name(harc[k]) + ") not inside the arc of " +
                                   edge_text(G1, e));
    }
  }
  return r;
}

}  // namespace nodkit
