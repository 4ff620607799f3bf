#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "nodkit/dual.hpp"
#include "nodkit/error.hpp"
#include "nodkit/simple_nod.hpp"

using namespace nodkit;
using testing::path_graph;
using testing::star_graph;

namespace {

// Random tree on k vertices with a light simplicial map into target,
// built by walking from a random image of the root.
SimplicialMap random_light_map(std::mt19937& rng, int k, GraphPtr target, const std::string& prefix) {
  std::vector<std::string> vs;
  std::vector<NamePair> es;
  std::vector<Index> img;
  std::uniform_int_distribution<Index> pick_root(0, static_cast<Index>(target->vertex_count() - 1));
  vs.push_back(indexed(prefix, 0));
  img.push_back(pick_root(rng));
  for (int i = 1; i < k; ++i) {
    int parent = std::uniform_int_distribution<int>(0, i - 1)(rng);
    auto nb = target->neighbors(img[parent]);
    Index y = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
    vs.push_back(indexed(prefix, i));
    es.emplace_back(vs[parent], vs.back());
    img.push_back(y);
  }
  auto dom = make_graph(vs, es);
  std::map<std::string, std::string> a;
  for (int i = 0; i < k; ++i) a[vs[i]] = target->name(img[i]);
  return SimplicialMap::from_names(dom, target, a);
}

}  // namespace

TEST_SUITE("dualops") {

TEST_CASE("dual of a simple triod is a triangle") {
  auto d = dual_graph(star_graph({1, 1, 1}));
  CHECK(d.graph->vertex_count() == 3);
  CHECK(d.graph->edge_count() == 3);
  CHECK(d.graph->names() == std::vector<std::string>{"a1", "a2", "a3"});
}

TEST_CASE("dual of a path is a shorter path") {
  auto d = dual_graph(path_graph(5));
  CHECK(d.graph->vertex_count() == 4);
  CHECK(d.graph->is_tree());
}

TEST_CASE("dual of a fold") {
  // p0 p1 p2 p3 p4 folded onto q0 q1 q2: edges over q0-q1 form two components
  auto p = path_graph(5);
  auto q = path_graph(3, "q");
  auto f = SimplicialMap::from_names(p, q, {{"p0", "q0"}, {"p1", "q1"}, {"p2", "q2"}, {"p3", "q1"}, {"p4", "q0"}});
  auto d = dual_of_map(f);
  CHECK(d.graph->vertex_count() == 3);
  CHECK(d.graph->names() == std::vector<std::string>{"b0", "b1", "b2"});
  CHECK(d.star[2].edges.size() == 2);  // p1-p2-p3 over q1-q2
  CHECK(is_ultra_light(d.induced) == false);
  CHECK(map_properties(d.induced).light);
}

TEST_CASE("identity has an ultra light dual") {
  auto s = star_graph({2, 1, 1, 3});
  auto d = dual_of_map(identity_map(s));
  CHECK(is_ultra_light(d.induced));
  CHECK(d.graph->vertex_count() == s->edge_count());
}

TEST_CASE("collapsing maps may have no dual") {
  auto p = path_graph(2);
  auto q = path_graph(2, "q");
  auto f = SimplicialMap::from_names(p, q, {{"p0", "q0"}, {"p1", "q0"}});
  CHECK_THROWS_AS(dual_of_map(f), DualError);
}

TEST_CASE("d_pair rejects non-composable maps") {
  auto p = path_graph(3);
  auto q = path_graph(2, "q");
  auto f = SimplicialMap::from_names(p, q, {{"p0", "q0"}, {"p1", "q1"}, {"p2", "q0"}});
  CHECK_THROWS_AS(d_pair(f, f), MapError);
}

TEST_CASE("d_pair factors the dual of a composite (random)") {
  std::mt19937 rng(20261017);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto g0 = star_graph({1, 2, 1});
    auto f = random_light_map(rng, 4 + trial % 5, g0, "x");
    auto g = random_light_map(rng, 5 + trial % 7, f.domain_ptr(), "y");
    std::optional<DualOfMap> dfg, df;
    try {
      df = dual_of_map(f);
      dfg = dual_of_map(compose(f, g));
    } catch (const DualError&) {
      continue;
    }
    SimplicialMap dp = d_pair(f, g);
    CHECK(same_graph(dp.domain_ptr(), dfg->graph));
    CHECK(same_graph(dp.codomain_ptr(), df->graph));
    for (Index v = 0; v < dfg->graph->vertex_count(); ++v) CHECK(df->induced[dp[v]] == dfg->induced[v]);
    ++checked;
  }
  CHECK(checked > 100);
}

}
