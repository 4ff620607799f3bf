#include "nodkit/factoring.hpp"

#include <algorithm>
#include <fstream>

#include "nodkit/error.hpp"
#include "nodkit/family.hpp"
#include "nodkit/ids.hpp"
#include "nodkit/patterns.hpp"
#include "search_internal.hpp"

namespace nodkit {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::found: return "Found";
    case Verdict::refuted: return "Refuted";
    case Verdict::inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(Strategy s) { return s == Strategy::congruence ? "congruence" : "lift"; }

namespace detail {

Problem make_problem(const SimplicialMap& phi) {
  const Graph& D = phi.domain();
  const Graph& C = phi.codomain();
  SimpleNOd od = recognize_simple_n_od(phi.codomain_ptr());
  Problem p{phi, C.at(od.branch), 0, {}, {}};
  for (Index v = 1; v < D.vertex_count(); ++v)
    if (D.degree(v) > D.degree(p.root)) p.root = v;
  p.parent.assign(D.vertex_count(), p.root);
  std::vector<Index> stack{p.root};
  std::vector<char> seen(D.vertex_count(), 0);
  seen[p.root] = 1;
  while (!stack.empty()) {
    Index x = stack.back();
    stack.pop_back();
    p.order.push_back(x);
    auto nb = D.neighbors(x);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it)
      if (!seen[*it]) {
        seen[*it] = 1;
        p.parent[*it] = x;
        stack.push_back(*it);
      }
  }
  return p;
}

Factorization make_factorization(const SimplicialMap& phi, const std::vector<Index>& tlabel,
                                 const std::vector<std::pair<Index, Index>>& tedges, Index branch,
                                 const std::vector<Index>& alpha) {
  std::vector<std::string> names;
  for (std::size_t t = 0; t < tlabel.size(); ++t) names.push_back(indexed("t", static_cast<long>(t)));
  std::vector<NamePair> edges;
  for (auto [a, b] : tedges) edges.emplace_back(names[a], names[b]);
  GraphPtr T = make_graph(names, edges);
  // names are in natural order, so indices agree with creation order
  SimpleNOd od = recognize_simple_n_od(T, names[branch]);
  return {std::move(od), VertexMap(phi.domain_ptr(), T, alpha), VertexMap(T, phi.codomain_ptr(), tlabel)};
}

}  // namespace detail

Report verify_factorization(const SimplicialMap& phi, const Factorization& cand, bool anchored) {
  Report r;
  const SimpleNOd& t = cand.target;
  if (!t.graph) {
    r.add("target", "missing graph");
    return r;
  }
  try {
    SimpleNOd od = recognize_simple_n_od(t.graph, t.branch);
    auto sorted = [](std::vector<Walk> a) {
      std::sort(a.begin(), a.end());
      return a;
    };
    if (sorted(od.arms) != sorted(t.arms)) r.add("target", "arms do not match the graph");
  } catch (const Error& e) {
    r.add("target", e.what());
  }
  if (!same_graph(cand.alpha.domain_ptr(), phi.domain_ptr())) r.add("shape", "alpha domain differs from phi domain");
  if (!same_graph(cand.alpha.codomain_ptr(), t.graph)) r.add("shape", "alpha codomain is not the target");
  if (!same_graph(cand.beta.domain_ptr(), t.graph)) r.add("shape", "beta domain is not the target");
  if (!same_graph(cand.beta.codomain_ptr(), phi.codomain_ptr()))
    r.add("shape", "beta codomain differs from phi codomain");
  if (!r.ok()) return r;

  if (auto e = cand.alpha.first_nonsimplicial_edge()) {
    auto [a, b] = phi.domain().edge_names(*e);
    r.add("alpha-simplicial", a + "-" + b);
  }
  if (auto e = cand.beta.first_nonsimplicial_edge()) {
    auto [a, b] = t.graph->edge_names(*e);
    r.add("beta-simplicial", a + "-" + b);
  }
  const Graph& D = phi.domain();
  for (Index x = 0; x < D.vertex_count(); ++x)
    if (cand.beta[cand.alpha[x]] != phi[x]) {
      r.add("composition", D.name(x));
      break;
    }
  if (anchored) {
    try {
      SimpleNOd od = recognize_simple_n_od(phi.codomain_ptr());
      const std::string& img = cand.beta.image_of(t.branch);
      if (img != od.branch) r.add("anchor", t.branch + " goes to " + img + ", not " + od.branch);
    } catch (const Error& e) {
      r.add("anchor", e.what());
    }
  }
  return r;
}

SearchResult search_factorization(const SimplicialMap& phi, const SearchOptions& opts) {
  if (opts.k_max < 1) throw PreconditionError("k_max must be positive");
  if (!phi.domain().is_tree()) throw PreconditionError("domain is not a tree");
  if (!is_light(phi)) throw PreconditionError("map is not light");
  if (!is_surjective(phi)) throw PreconditionError("map is not surjective");
  detail::Problem p = [&] {
    try {
      return detail::make_problem(phi);
    } catch (const RecognitionError& e) {
      throw PreconditionError(std::string("codomain: ") + e.what());
    }
  }();

  detail::Deadline dl;
  auto t0 = std::chrono::steady_clock::now();
  if (opts.timeout) dl.at = t0 + *opts.timeout;
  SearchResult res = opts.strategy == Strategy::congruence ? detail::search_congruence(p, opts, dl)
                                                           : detail::search_lift(p, opts, dl);
  auto& c = res.certificate;
  c.strategy = to_string(opts.strategy);
  c.anchored = opts.anchored;
  c.k_max = opts.k_max;
  c.domain_vertices = phi.domain().vertex_count();
  c.domain_edges = phi.domain().edge_count();
  c.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (res.witness) {
    Report r = verify_factorization(phi, *res.witness, opts.anchored);
    if (!r.ok()) throw Error("internal: search produced an invalid witness (" + r.violations[0].kind + ")");
  }
  return res;
}

Factorization pad_with_unit_arm(const Factorization& f) {
  const Graph& T = *f.target.graph;
  GraphData data = T.data();
  std::string fresh;
  for (long k = static_cast<long>(T.vertex_count());; ++k) {
    fresh = indexed("t", k);
    if (!T.find(fresh)) break;
  }
  data.vertices.push_back(fresh);
  data.edges.emplace_back(f.target.branch, fresh);
  GraphPtr P = std::make_shared<const Graph>(data);

  const Graph& C = f.beta.codomain();
  Index b = f.beta[T.at(f.target.branch)];
  if (C.degree(b) == 0) throw PreconditionError("codomain has no edge at the branch image");
  std::map<std::string, std::string> beta = f.beta.assignment();
  beta[fresh] = C.name(C.neighbors(b)[0]);
  std::map<std::string, std::string> alpha = f.alpha.assignment();

  SimpleNOd od = recognize_simple_n_od(P, f.target.branch);
  return {std::move(od), VertexMap::from_names(f.alpha.domain_ptr(), P, alpha),
          VertexMap::from_names(P, f.beta.codomain_ptr(), beta)};
}

json to_json(const Factorization& f) {
  json arms = json::array();
  for (const auto& a : f.target.arms) arms.push_back(walk_to_json(a));
  return {{"target", to_json(*f.target.graph)},
          {"branch", f.target.branch},
          {"arms", arms},
          {"alpha", f.alpha.assignment()},
          {"beta", f.beta.assignment()}};
}

json to_json(const ExhaustionCertificate& c, bool timing) {
  json j = {{"strategy", c.strategy},
            {"anchored", c.anchored},
            {"k_max", c.k_max},
            {"candidates", c.candidates},
            {"pruned", c.pruned},
            {"complete", c.complete},
            {"domain_vertices", c.domain_vertices},
            {"domain_edges", c.domain_edges}};
  if (c.strategy == "lift") j["arm_length_bound"] = c.arm_length_bound;
  if (timing) j["wall_ms"] = c.wall_ms;
  return j;
}

json to_json(const SearchResult& r, bool timing) {
  json j = {{"verdict", to_string(r.verdict)}};
  if (r.witness) {
    j["k"] = r.witness->target.arm_count();
    j["witness"] = to_json(*r.witness);
  }
  j["certificate"] = to_json(r.certificate, timing);
  return j;
}

std::vector<FactorRow> factor_report(int n, int m, const std::vector<int>& ks, const FactorReportOptions& opts) {
  if (m < 1) throw PreconditionError("m must be at least 1");
  InverseSystem sys = family_system(n);
  sys.extend_to(static_cast<std::size_t>(m));
  SimplicialMap phi = sys.composite(0, static_cast<std::size_t>(m));
  if (opts.certificate_dir) std::filesystem::create_directories(*opts.certificate_dir);

  std::vector<FactorRow> rows;
  for (int k : ks) {
    SearchOptions so;
    so.k_max = k;
    so.anchored = true;
    so.timeout = opts.timeout;
    so.jobs = opts.jobs;
    so.strategy = Strategy::congruence;
    SearchResult a = search_factorization(phi, so);
    so.strategy = Strategy::lift;
    SearchResult b = search_factorization(phi, so);
    bool agree = a.verdict == b.verdict || a.verdict == Verdict::inconclusive || b.verdict == Verdict::inconclusive;
    if (opts.certificate_dir) {
      json j = {{"n", n}, {"m", m}, {"k", k}, {"congruence", to_json(a, opts.timing)}, {"lift", to_json(b, opts.timing)}};
      std::ofstream out(*opts.certificate_dir / ("n" + std::to_string(n) + "_m" + std::to_string(m) + "_k" +
                                                 std::to_string(k) + ".json"));
      out << j.dump(2) << '\n';
    }
    rows.push_back({k, std::move(a), std::move(b), agree});
  }
  return rows;
}

}  // namespace nodkit
