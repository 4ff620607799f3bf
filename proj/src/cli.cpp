#include "nodkit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nodkit/dual.hpp"
#include "nodkit/error.hpp"
#include "nodkit/factoring.hpp"
#include "nodkit/family.hpp"
#include "nodkit/graph_io.hpp"
#include "nodkit/ids.hpp"
#include "nodkit/inverse_system.hpp"
#include "nodkit/patterns.hpp"

namespace nodkit::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::pair<int, int> parse_range(const std::string& s) {
  auto num = [&](const std::string& t) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != t.size()) throw UsageError("bad range: " + s);
    return v;
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    int v = num(s);
    return {v, v};
  }
  int a = num(s.substr(0, dots)), b = num(s.substr(dots + 2));
  if (a > b) throw UsageError("empty range: " + s);
  return {a, b};
}

void emit(const json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("cannot write " + out);
  f << j.dump(2) << '\n';
}

json pairs_json(const std::vector<std::pair<int, int>>& v) {
  json a = json::array();
  for (auto [x, y] : v) a.push_back({x, y});
  return a;
}

json selection_json(const EdgeSelection& s) {
  const Graph& g = s.graph();
  json j = json::object();
  for (Index v = 0; v < g.vertex_count(); ++v) {
    json a = json::array();
    for (auto e : s.at(v)) {
      auto [x, y] = g.edge_names(e);
      a.push_back({x, y});
    }
    j[g.name(v)] = a;
  }
  return j;
}

json subdivision_json(const Subdivision& s) {
  json arcs = json::array();
  for (std::size_t e = 0; e < s.coarse->edge_count(); ++e) {
    auto [x, y] = s.coarse->edge_names(e);
    arcs.push_back({{"edge", {x, y}}, {"arc", walk_to_json(s.arc_of(x, y))}});
  }
  return {{"fine", to_json(*s.fine)}, {"coarse", to_json(*s.coarse)}, {"arcs", arcs}};
}

json dual_json(const DualOfMap& d) {
  const Graph& S = *d.source;
  json star = json::object();
  for (Index b = 0; b < d.graph->vertex_count(); ++b) {
    json edges = json::array();
    for (const auto& e : d.star[b].edges) edges.push_back({S.name(e.a), S.name(e.b)});
    star[d.graph->name(b)] = edges;
  }
  return {{"graph", to_json(*d.graph)},
          {"star", star},
          {"target", to_json(*d.target.graph)},
          {"induced", to_json(static_cast<const VertexMap&>(d.induced))},
          {"ultra_light", is_ultra_light(d.induced)}};
}

json golden_json(const ExpectedDual& g) {
  json star = json::array();
  for (const auto& s : g.star) {
    json edges = json::array();
    for (const auto& [x, y] : s) edges.push_back({x, y});
    star.push_back(edges);
  }
  json x0_star = json::array();
  for (const auto& [x, y] : g.x0_star) x0_star.push_back({x, y});
  json inv = json::array();
  for (const auto& r : g.edge_inverses)
    inv.push_back({{"a", {r.a_from, r.a_to}}, {"b", pairs_json(r.b_edges)}, {"supplemented", r.supplemented}});
  return {{"n", g.n},          {"x0_star", x0_star}, {"x0_edges", pairs_json(g.x0_edges)},
          {"star", star},      {"edges", pairs_json(g.edges)},
          {"d", g.d},          {"arcs", g.arcs},     {"edge_inverses", inv}};
}

void need_n(int n) {
  if (n < 3) throw UsageError("--n must be at least 3");
}

int cmd_family(int n, bool golden, const std::string& out) {
  need_n(n);
  if (golden) {
    emit(golden_json(expected_dual(n)), out);
    return 0;
  }
  FamilyBundle f = build_family(n);
  json parts = {{"x0", to_json(*f.x0.graph)},
                {"x1", to_json(*f.x1.graph)},
                {"x1_over_x0", subdivision_json(f.x1_over_x0)},
                {"phi", to_json(static_cast<const VertexMap&>(f.phi))},
                {"selection", selection_json(f.selection)},
                {"y1_over_x0", subdivision_json(f.y1_over_x0)},
                {"dual", dual_json(f.dual)},
                {"lambda", to_json(static_cast<const VertexMap&>(f.lambda))}};
  if (out.empty() || out == "-") {
    json j = {{"n", n}};
    for (auto& [k, v] : parts.items()) j[k] = v;
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::filesystem::create_directories(out);
  json index = {{"n", n}, {"files", json::object()}};
  for (auto& [k, v] : parts.items()) {
    std::string file = k + ".json";
    std::ofstream(std::filesystem::path(out) / file) << v.dump(2) << '\n';
    index["files"][k] = file;
  }
  std::ofstream(std::filesystem::path(out) / "family.json") << index.dump(2) << '\n';
  std::cout << index.dump(2) << '\n';
  return 0;
}

int cmd_dual(int n, const std::string& map_file, const std::string& out) {
  if (!map_file.empty()) {
    std::ifstream in(map_file);
    if (!in) throw UsageError("cannot read " + map_file);
    SimplicialMap f(map_from_json(json::parse(in)));
    emit(dual_json(dual_of_map(f)), out);
    return 0;
  }
  need_n(n);
  emit(dual_json(build_family(n).dual), out);
  return 0;
}

int cmd_system(int n, int depth, const std::string& out) {
  need_n(n);
  if (depth < 0) throw UsageError("--depth must be nonnegative");
  InverseSystem sys = family_system(n);
  sys.extend_to(static_cast<std::size_t>(depth));
  if (out.empty()) {
    std::cout << system_manifest(sys).dump(2) << '\n';
    return 0;
  }
  std::filesystem::create_directories(out);
  std::cout << export_system(sys, out).dump(2) << '\n';
  return 0;
}

int cmd_expand(int n, int m, int arm, const std::string& format) {
  need_n(n);
  if (m < 0) throw UsageError("--m must be nonnegative");
  if (arm < 1 || arm > n) throw UsageError("--arm must lie in 1..n");
  ArmPattern p = pattern_direct(n, m, arm);
  if (format == "json") {
    json j = {{"n", n}, {"m", m}, {"arm", arm}, {"length", p.walk.size() - 1}, {"walk", walk_to_json(p.walk)}};
    std::cout << j.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < p.walk.size(); ++i) std::cout << (i ? "," : "") << p.walk[i];
    std::cout << '\n';
  }
  return 0;
}

json report_json(const Report& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"detail", x.detail}});
  return v;
}

json check_one(const std::string& prop, int n, std::pair<int, int> ms) {
  json row = {{"n", n}};
  Report r;
  if (prop == "preserves") {
    FamilyBundle f = build_family(n);
    r = check_preserves(f.phi, f.x1_over_x0, f.selection, f.selection);
  } else if (prop == "ultra-light") {
    FamilyBundle f = build_family(n);
    if (!is_ultra_light(f.dual.induced)) r.add("ultra-light", "d is not ultra light");
    const Graph& B = *f.dual.graph;
    const Graph& A = *f.dual.target.graph;
    ExpectedDual g = expected_dual(n);
    try {
      std::vector<Index> pin = pin_numbering(g, f.dual);
      std::string got = A.name(f.dual.induced[pin[0]]);
      std::string want = indexed("a", n - 1);
      if (got != want) r.add("branch-value", "b0 goes to " + got + ", expected " + want);
      for (std::size_t k = 0; k < g.d.size(); ++k)
        if (A.name(f.dual.induced[pin[k]]) != indexed("a", g.d[k]))
          r.add("d-value", B.name(pin[k]) + " goes to " + A.name(f.dual.induced[pin[k]]));
    } catch (const DualError& e) {
      r.add("structure", e.what());
    }
    row["dual_vertices"] = B.vertex_count();
  } else if (prop == "consistency") {
    FamilyBundle f = build_family(n);
    r = check_consistency(f.phi, f.x1_over_x0, f.selection, f.y1_over_x0, f.lambda);
  } else if (prop == "recursion" || prop == "normal-form") {
    InverseSystem sys = family_system(n);
    auto rec = recursive_patterns(n, ms.second);
    for (int m = ms.first; m <= ms.second; ++m) {
      std::vector<ArmPattern> pats;
      for (int i = 1; i <= n; ++i) pats.push_back(pattern_direct(sys, n, m, i));
      if (prop == "recursion") {
        for (int i = 1; i <= n; ++i)
          if (rec[m][i - 1] != pats[i - 1].walk)
            r.add("recursion", "m=" + std::to_string(m) + " arm " + std::to_string(i));
        if (m >= 1 && pats[n - 3].walk != pattern_direct(sys, n, m - 1, n - 1).walk)
          r.add("shift", "m=" + std::to_string(m));
        continue;
      }
      std::vector<Walk> walks;
      for (const auto& p : pats) walks.push_back(p.walk);
      Walk prefix = mine_common_prefix(walks);
      for (const auto& p : pats) {
        std::string where = "m=" + std::to_string(m) + " arm " + std::to_string(p.arm);
        try {
          NormalForm nf = normal_form(p, prefix);
          for (const auto& b : nf.blocks)
            if (!is_block(b, n)) r.add("block", where);
          if (nf.suffix != spelled_suffix(n)) r.add("suffix", where);
        } catch (const Error& e) {
          r.add("normal-form", where + ": " + e.what());
        }
      }
    }
  } else {
    throw UsageError("unknown property " + prop);
  }
  row["ok"] = r.ok();
  row["violations"] = report_json(r);
  return row;
}

int cmd_check(const std::string& prop, const std::string& nrange, const std::string& mrange, const std::string& out) {
  auto [lo, hi] = parse_range(nrange);
  need_n(lo);
  std::pair<int, int> ms{1, 1};
  if (prop == "recursion") ms = parse_range(mrange.empty() ? "1..6" : mrange);
  if (prop == "normal-form") ms = parse_range(mrange.empty() ? "3..5" : mrange);
  if (ms.first < 0 || (prop == "normal-form" && ms.first < 3)) throw UsageError("--m out of range for " + prop);
  json rows = json::array();
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    json row = check_one(prop, n, ms);
    ok = ok && row["ok"].get<bool>();
    rows.push_back(row);
  }
  emit({{"prop", prop}, {"ok", ok}, {"results", rows}}, out);
  return ok ? 0 : 1;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::found: return 0;
    case Verdict::refuted: return 1;
    default: return 2;
  }
}

int cmd_factor(int n, int m, int k, bool anchored, const std::string& strategy, double timeout_s, unsigned jobs,
               const std::string& out, bool timing) {
  need_n(n);
  if (m < 1) throw UsageError("--m must be at least 1");
  if (k < 1) throw UsageError("--k must be positive");
  InverseSystem sys = family_system(n);
  sys.extend_to(static_cast<std::size_t>(m));
  SimplicialMap phi = sys.composite(0, static_cast<std::size_t>(m));

  SearchOptions so;
  so.k_max = k;
  so.anchored = anchored;
  so.jobs = jobs;
  if (timeout_s > 0) so.timeout = std::chrono::milliseconds(static_cast<long long>(timeout_s * 1000));

  std::vector<Strategy> which;
  if (strategy == "congruence" || strategy == "both") which.push_back(Strategy::congruence);
  if (strategy == "lift" || strategy == "both") which.push_back(Strategy::lift);

  json results = json::object();
  std::optional<Verdict> verdict;
  bool disagree = false;
  for (Strategy s : which) {
    so.strategy = s;
    SearchResult r = search_factorization(phi, so);
    results[to_string(s)] = to_json(r, timing);
    if (!verdict || *verdict == Verdict::inconclusive) {
      verdict = r.verdict;
    } else if (r.verdict != Verdict::inconclusive && r.verdict != *verdict) {
      disagree = true;
    }
  }
  Verdict v = disagree ? Verdict::inconclusive : *verdict;
  json j = {{"n", n}, {"m", m}, {"k", k}, {"anchored", anchored}, {"verdict", to_string(v)}, {"agree", !disagree},
            {"results", results}};
  emit(j, out);
  if (!out.empty() && out != "-") std::cout << to_string(v) << '\n';
  return exit_for(v);
}

int cmd_export_dot(int n, int depth, const std::string& out) {
  need_n(n);
  if (depth < 0) throw UsageError("--depth must be nonnegative");
  if (out.empty()) throw UsageError("--out is required");
  FamilyBundle f = build_family(n);
  InverseSystem sys = family_system(n);
  sys.extend_to(static_cast<std::size_t>(depth));
  std::filesystem::create_directories(out);
  std::vector<std::pair<std::string, GraphPtr>> graphs;
  for (std::size_t i = 0; i <= static_cast<std::size_t>(depth); ++i)
    graphs.emplace_back("level_" + std::to_string(i), sys.level(i));
  graphs.emplace_back("y1", f.y1_over_x0.fine);
  graphs.emplace_back("dual", f.dual.graph);
  json files = json::array();
  for (const auto& [name, g] : graphs) {
    std::ofstream(std::filesystem::path(out) / (name + ".dot")) << to_dot(*g, name);
    files.push_back(name + ".dot");
  }
  std::cout << json{{"files", files}}.dump(2) << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"nodkit: simple-n-od bonding maps, duals, inverse systems and factorization search"};
  app.require_subcommand(1);

  int n = 0, m = 1, arm = 1, k = 1, depth = 2;
  std::string out, format = "text", prop, nrange, mrange, strategy = "both", map_file;
  bool golden = false, anchored = false, timing = false;
  double timeout = 0;
  unsigned jobs = 1;

  auto* family = app.add_subcommand("family", "build the family bundle for n");
  family->add_option("--n", n, "number of arms")->required();
  family->add_flag("--golden", golden, "emit the formula-level dual expectations instead");
  family->add_option("--out", out, "output directory (or file with --golden)");

  auto* dual = app.add_subcommand("dual", "dual of the family map, or of a map read from JSON");
  dual->add_option("--n", n, "number of arms");
  dual->add_option("--map", map_file, "map JSON file");
  dual->add_option("--out", out, "output file");

  auto* system = app.add_subcommand("system", "generate the inverse system");
  system->add_option("--n", n)->required();
  system->add_option("--depth", depth, "levels beyond X0");
  system->add_option("--out", out, "export directory");

  auto* expand = app.add_subcommand("expand", "arm pattern of X_m over X_0");
  expand->add_option("--n", n)->required();
  expand->add_option("--m", m)->required();
  expand->add_option("--arm", arm)->required();
  expand->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* check = app.add_subcommand("check", "property suites over a range of n");
  check->add_option("--prop", prop)
      ->required()
      ->check(CLI::IsMember({"preserves", "ultra-light", "consistency", "recursion", "normal-form"}));
  check->add_option("--n", nrange, "n or lo..hi")->required();
  check->add_option("--m", mrange, "m or lo..hi (recursion, normal-form)");
  check->add_option("--out", out, "output file");

  auto* factor = app.add_subcommand("factor", "search for a factorization of X_m -> X_0 through a simple-k-od");
  factor->add_option("--n", n)->required();
  factor->add_option("--m", m)->required();
  factor->add_option("--k", k, "largest number of arms")->required();
  factor->add_flag("--anchored", anchored, "branch must go to v0");
  factor->add_option("--strategy", strategy)->check(CLI::IsMember({"congruence", "lift", "both"}));
  factor->add_option("--timeout", timeout, "seconds per strategy, 0 for none");
  factor->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  factor->add_option("--out", out, "certificate file");
  factor->add_flag("--timing", timing, "include wall-clock times");

  auto* dot = app.add_subcommand("export-dot", "DOT files for the system levels, Y1 and the dual");
  dot->add_option("--n", n)->required();
  dot->add_option("--depth", depth);
  dot->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (*family) return cmd_family(n, golden, out);
    if (*dual) return cmd_dual(n, map_file, out);
    if (*system) return cmd_system(n, depth, out);
    if (*expand) return cmd_expand(n, m, arm, format);
    if (*check) return cmd_check(prop, nrange, mrange, out);
    if (*factor) return cmd_factor(n, m, k, anchored, strategy, timeout, jobs, out, timing);
    if (*dot) return cmd_export_dot(n, depth, out);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const PreconditionError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return exit_usage;
}

}  // namespace nodkit::cli
