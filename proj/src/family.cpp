#include "nodkit/family.hpp"

#include <algorithm>
#include <map>

#include "nodkit/error.hpp"
#include "nodkit/ids.hpp"

namespace nodkit {

int residue(int x, int n) {
  int m = n - 2;
  int r = ((x % m) + m) % m;
  return r == 0 ? m : r;
}

int cyclic_successor(int i, int n) { return i == n - 2 ? 1 : i + 1; }

std::string vname(int i) { return indexed("v", i); }
std::string uname(int i) { return indexed("u", i); }
std::string wname(int i) { return indexed("w", i); }

namespace {

void require_n(int n) {
  if (n < 3) throw PreconditionError("n must be at least 3, got " + std::to_string(n));
}

std::vector<NamePair> path_edges(const Walk& w) {
  std::vector<NamePair> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k) out.emplace_back(w[k], w[k + 1]);
  return out;
}

GraphPtr graph_of_arcs(const std::vector<Walk>& arcs) {
  std::vector<std::string> names;
  std::vector<NamePair> edges;
  for (const auto& w : arcs) {
    names.insert(names.end(), w.begin(), w.end());
    auto e = path_edges(w);
    edges.insert(edges.end(), e.begin(), e.end());
  }
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return make_graph(std::move(names), edges);
}

std::vector<Walk> x0_edges(int n) {
  std::vector<Walk> out;
  for (int i = 1; i <= n; ++i) out.push_back({vname(0), vname(i)});
  out.push_back({vname(n - 1), vname(n + 1)});
  out.push_back({vname(n), vname(n + 2)});
  return out;
}

int k_offset(int n) { return (2 * n - 1) * (n - 3); }

std::vector<Walk> x1_arcs(int n) {
  const int K = k_offset(n);
  std::vector<Walk> arcs;
  for (int i = 1; i <= n - 3; ++i) {
    Walk w{vname(0)};
    for (int j = 0; j <= 2 * (n - 1); ++j) w.push_back(uname(j * (n - 3) + i));
    w.push_back(vname(i));
    arcs.push_back(std::move(w));
  }
  arcs.push_back({vname(0), uname(K + 2 * n - 1), vname(n - 2)});
  arcs.push_back({vname(0), uname(K + 2 * n), uname(K + 2 * n + 1), vname(n - 1)});
  Walk an{vname(0)};
  for (int i = 1; i <= 2 * (n - 1); ++i) an.push_back(uname(K + i));
  an.push_back(vname(n));
  arcs.push_back(std::move(an));
  arcs.push_back({vname(n - 1), vname(n + 1)});
  arcs.push_back({vname(n), vname(n + 2)});
  return arcs;
}

std::map<std::string, std::string> phi_table(int n) {
  const int K = k_offset(n);
  std::map<std::string, std::string> t;
  t[vname(0)] = vname(0);
  for (int i = 1; i <= n - 3; ++i) t[vname(i)] = vname(n + 2);
  t[vname(n - 2)] = vname(n + 1);
  t[vname(n - 1)] = vname(n);
  t[vname(n)] = vname(n);
  t[vname(n + 1)] = vname(n + 2);
  t[vname(n + 2)] = vname(n + 2);
  for (int i = 1; i <= n - 3; ++i) {
    t[uname(i)] = vname(n - 1);
    for (int j = 1; j <= 2 * n - 3; j += 2) t[uname(j * (n - 3) + i)] = vname(0);
    for (int j = 2; j <= 2 * n - 4; j += 2) t[uname(j * (n - 3) + i)] = vname(residue(i - 1 + j / 2, n));
    t[uname(2 * (n - 1) * (n - 3) + i)] = vname(n);
  }
  t[uname(K + 1)] = vname(n - 1);
  for (int i = 2; i <= 2 * (n - 1); i += 2) t[uname(K + i)] = vname(0);
  t[uname(K + 3)] = vname(n - 2);
  for (int i = 5; i <= 2 * n - 3; i += 2) t[uname(K + i)] = vname((i - 3) / 2);
  t[uname(K + 2 * n - 1)] = vname(n - 1);
  t[uname(K + 2 * n)] = vname(n - 1);
  t[uname(K + 2 * n + 1)] = vname(0);
  return t;
}

std::vector<Walk> y1_arcs(int n) {
  std::vector<Walk> arcs;
  for (int i = 1; i <= n - 3; ++i) {
    Walk w{vname(0)};
    for (int j = 0; j <= n - 2; ++j) w.push_back(wname(j * (n - 3) + i));
    w.push_back(vname(i));
    arcs.push_back(std::move(w));
  }
  arcs.push_back({vname(0), vname(n - 2)});
  arcs.push_back({vname(0), vname(n - 1)});
  Walk an{vname(0)};
  for (int i = 1; i <= n - 2; ++i) an.push_back(wname((n - 1) * (n - 3) + i));
  an.push_back(vname(n));
  arcs.push_back(std::move(an));
  arcs.push_back({vname(n - 1), vname(n + 1)});
  arcs.push_back({vname(n), vname(n + 2)});
  return arcs;
}

// Closed-form b-index of each Y1 vertex.
std::map<std::string, int> lambda_table(int n) {
  const int N = n * (n - 3);
  std::map<std::string, int> t;
  t[vname(0)] = 0;
  for (int i = 1; i <= n - 3; ++i) t[vname(i)] = (n - 1) * (n - 3) + i;
  t[vname(n - 2)] = N + n + 1;
  t[vname(n - 1)] = N + n + 2;
  t[vname(n)] = N + n - 1;
  t[vname(n + 1)] = N + n + 3;
  t[vname(n + 2)] = N + n;
  for (int i = 1; i <= n - 3; ++i)
    for (int j = 0; j <= n - 2; ++j) t[wname(j * (n - 3) + i)] = j * (n - 3) + i;
  for (int i = 1; i <= n - 2; ++i) t[wname((n - 1) * (n - 3) + i)] = N + i;
  return t;
}

}  // namespace

FamilyBundle build_family(int n) {
  require_n(n);
  std::vector<Walk> base = x0_edges(n);
  GraphPtr x0 = graph_of_arcs(base);
  std::vector<Walk> arcs = x1_arcs(n);
  GraphPtr x1 = graph_of_arcs(arcs);
  Subdivision x1_over = make_subdivision(x1, x0, arcs);
  SimplicialMap phi = SimplicialMap::from_names(x1, x0, phi_table(n));

  std::map<std::string, std::vector<NamePair>> sel;
  for (int i = 1; i <= n; ++i) sel[vname(i)] = {{vname(0), vname(i)}};
  sel[vname(n + 1)] = {{vname(n - 1), vname(n + 1)}};
  sel[vname(n + 2)] = {{vname(n), vname(n + 2)}};
  for (int i = 1; i <= n - 1; ++i) sel[vname(0)].emplace_back(vname(0), vname(i));
  EdgeSelection selection = EdgeSelection::from_names(x0, sel);

  std::vector<Walk> yarcs = y1_arcs(n);
  GraphPtr y1 = graph_of_arcs(yarcs);
  Subdivision y1_over = make_subdivision(y1, x0, yarcs);

  DualOfMap dual = dual_of_map(phi);
  std::vector<Index> pin = pin_numbering(expected_dual(n), dual);
  std::vector<Index> image(y1->vertex_count());
  for (const auto& [name, b] : lambda_table(n)) image[y1->at(name)] = pin[static_cast<std::size_t>(b)];
  SimplicialMap lambda(y1, dual.graph, std::move(image));

  return FamilyBundle{n,
                      recognize_simple_n_od(x0, vname(0)),
                      recognize_simple_n_od(x1, vname(0)),
                      std::move(x1_over),
                      std::move(phi),
                      std::move(selection),
                      std::move(y1_over),
                      std::move(dual),
                      std::move(lambda)};
}

ExpectedDual expected_dual(int n) {
  require_n(n);
  const int K = k_offset(n);
  const int N = n * (n - 3);
  const int m = n - 3;
  ExpectedDual g;
  g.n = n;

  for (const auto& w : x0_edges(n)) g.x0_star.emplace_back(w[0], w[1]);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) g.x0_edges.emplace_back(i, j);
  g.x0_edges.emplace_back(n - 1, n + 1);
  g.x0_edges.emplace_back(n, n + 2);

  auto U = [](int i) { return uname(i); };
  auto V = [](int i) { return vname(i); };
  g.star.assign(static_cast<std::size_t>(N + n + 4), {});
  g.d.assign(g.star.size(), 0);
  auto& b0 = g.star[0];
  for (int i = 1; i <= m; ++i) {
    b0.emplace_back(V(0), U(i));
    b0.emplace_back(U(i), U(m + i));
  }
  b0.emplace_back(V(0), U(K + 1));
  b0.emplace_back(U(K + 1), U(K + 2));
  b0.emplace_back(V(0), U(K + 2 * n - 1));
  b0.emplace_back(V(0), U(K + 2 * n));
  b0.emplace_back(U(K + 2 * n), U(K + 2 * n + 1));
  g.d[0] = n - 1;
  for (int i = 1; i <= m; ++i) {
    for (int j = 0; j <= n - 3; ++j) {
      int k = j * m + i;
      g.star[k] = {{U((2 * j + 1) * m + i), U((2 * j + 2) * m + i)}, {U((2 * j + 2) * m + i), U((2 * j + 3) * m + i)}};
      g.d[k] = residue(i + j, n);
    }
    g.star[(n - 2) * m + i] = {{U((2 * n - 3) * m + i), U(2 * (n - 1) * m + i)}};
    g.d[(n - 2) * m + i] = n;
    g.star[(n - 1) * m + i] = {{U(2 * (n - 1) * m + i), V(i)}};
    g.d[(n - 1) * m + i] = n + 2;
  }
  for (int i = 1; i <= n - 2; ++i) {
    g.star[N + i] = {{U(K + 2 * i), U(K + 2 * i + 1)}, {U(K + 2 * i + 1), U(K + 2 * i + 2)}};
    g.d[N + i] = i == 1 ? n - 2 : i - 1;
  }
  g.star[N + n - 1] = {{U(K + 2 * (n - 1)), V(n)}};
  g.d[N + n - 1] = n;
  g.star[N + n] = {{V(n), V(n + 2)}};
  g.d[N + n] = n + 2;
  g.star[N + n + 1] = {{U(K + 2 * n - 1), V(n - 2)}};
  g.d[N + n + 1] = n + 1;
  g.star[N + n + 2] = {{U(K + 2 * n + 1), V(n - 1)}};
  g.d[N + n + 2] = n;
  g.star[N + n + 3] = {{V(n - 1), V(n + 1)}};
  g.d[N + n + 3] = n + 2;

  for (int i = 1; i <= m; ++i) g.edges.emplace_back(0, i);
  g.edges.emplace_back(0, N + 1);
  g.edges.emplace_back(0, N + n + 1);
  g.edges.emplace_back(0, N + n + 2);
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j <= n - 2; ++j) g.edges.emplace_back(j * m + i, (j + 1) * m + i);
  for (int i = 1; i <= n - 1; ++i) g.edges.emplace_back(N + i, N + i + 1);
  g.edges.emplace_back(N + n + 2, N + n + 3);

  for (int i = 1; i <= m; ++i) {
    std::vector<int> arc{0};
    for (int j = 0; j <= n - 1; ++j) arc.push_back(j * m + i);
    g.arcs.push_back(std::move(arc));
  }
  g.arcs.push_back({0, N + n + 1});
  g.arcs.push_back({0, N + n + 2, N + n + 3});
  std::vector<int> bn{0};
  for (int i = 1; i <= n; ++i) bn.push_back(N + i);
  g.arcs.push_back(std::move(bn));

  auto row = [&](int x, int y, std::vector<std::pair<int, int>> es) {
    if (!es.empty()) g.edge_inverses.push_back({x, y, std::move(es)});
  };
  for (int i = 1; i <= m; ++i) row(n - 1, i, {{0, i}});
  row(n - 1, n - 2, {{0, N + 1}});
  row(n - 1, n + 1, {{0, N + n + 1}});
  row(n - 1, n, {{0, N + n + 2}});
  for (int i = 1; i <= n - 4; ++i) {
    std::vector<std::pair<int, int>> es;
    for (int j = 0; j <= i - 1; ++j) es.emplace_back(j * m + i - j, (j + 1) * m + i - j);
    for (int j = 1; j <= n - 4 - i; ++j) es.emplace_back((n - 3 - j) * m + i + 1 + j, (n - 2 - j) * m + i + 1 + j);
    es.emplace_back(N + i + 1, N + i + 2);
    row(i, i + 1, std::move(es));
  }
  {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= m; ++i) es.emplace_back((n - 3 - i) * m + i, (n - 2 - i) * m + i);
    if (n > 3) row(n - 3, n - 2, std::move(es));
  }
  for (int i = 1; i <= n - 4; ++i) row(i, n, {{(n - 3) * m + i + 1, (n - 2) * m + i + 1}});
  row(residue(n - 3, n), n, {{N + n - 2, N + n - 1}});
  if (m > 0) row(n - 2, n, {{(n - 3) * m + 1, (n - 2) * m + 1}});
  if (n >= 4) {
    std::vector<std::pair<int, int>> es{{N + 1, N + 2}};
    for (int i = 2; i <= n - 3; ++i) es.emplace_back((n - 2 - i) * m + i, (n - 1 - i) * m + i);
    row(1, n - 2, std::move(es));
    g.edge_inverses.back().supplemented = true;
  }
  {
    std::vector<std::pair<int, int>> es{{N + n - 1, N + n}, {N + n + 2, N + n + 3}};
    for (int i = 1; i <= m; ++i) es.emplace_back((n - 2) * m + i, (n - 1) * m + i);
    row(n, n + 2, std::move(es));
  }
  return g;
}

std::vector<Index> pin_numbering(const ExpectedDual& golden, const DualOfMap& dual) {
  const Graph& X1 = *dual.source;
  std::map<std::vector<Edge>, Index> by_star;
  for (std::size_t v = 0; v < dual.star.size(); ++v) by_star.emplace(dual.star[v].edges, static_cast<Index>(v));
  if (golden.star.size() != dual.star.size())
    throw DualError("dual has " + std::to_string(dual.star.size()) + " vertices, expected " +
                    std::to_string(golden.star.size()));
  std::vector<Index> pin;
  std::vector<char> used(dual.star.size(), 0);
  for (std::size_t k = 0; k < golden.star.size(); ++k) {
    std::vector<Edge> es;
    for (const auto& [a, b] : golden.star[k]) {
      auto e = X1.edge_index(X1.at(a), X1.at(b));
      if (!e) throw DualError("expected star of b" + std::to_string(k) + " uses a non-edge");
      es.push_back(X1.edge(*e));
    }
    std::sort(es.begin(), es.end());
    auto it = by_star.find(es);
    if (it == by_star.end()) throw DualError("no computed dual vertex has the star of b" + std::to_string(k));
    if (used[it->second]++) throw DualError("two expected stars match one dual vertex");
    pin.push_back(it->second);
  }
  return pin;
}

}  // namespace nodkit
