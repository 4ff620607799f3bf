#include <doctest.h>

#include <set>

#include "fixtures/family_fixtures.hpp"
#include "helpers.hpp"
#include "nodkit/error.hpp"
#include "nodkit/family.hpp"

using namespace nodkit;

TEST_SUITE("nodfamily") {

TEST_CASE("residues live in 1..n-2") {
  CHECK(residue(3, 5) == 3);
  CHECK(residue(6, 5) == 3);
  CHECK(residue(4, 6) == 4);
  CHECK(residue(0, 5) == 3);
  CHECK(residue(5, 3) == 1);
  CHECK(cyclic_successor(3, 5) == 1);
  CHECK(cyclic_successor(1, 5) == 2);
}

TEST_CASE("vertex counts") {
  const std::map<int, int> u_count = {{3, 7}, {4, 16}, {5, 29}};
  for (auto [n, us] : u_count) {
    auto fam = build_family(n);
    CHECK(fam.x0.graph->vertex_count() == static_cast<std::size_t>(n + 3));
    CHECK(fam.x0.arm_count() == static_cast<std::size_t>(n));
    CHECK(fam.x1.graph->vertex_count() == static_cast<std::size_t>(n + 3 + us));
    CHECK(fam.x1.graph->find(uname(us)).has_value());
    CHECK_FALSE(fam.x1.graph->find(uname(us + 1)).has_value());
    CHECK(fam.x1.branch == "v0");
  }
}

TEST_CASE("map values match the frozen tables") {
  for (const auto& [n, table] : fixtures::phi) {
    auto fam = build_family(n);
    std::map<std::string, std::string> want;
    for (const auto& kv : testing::split(table, ' ')) {
      auto colon = kv.find(':');
      want[kv.substr(0, colon)] = kv.substr(colon + 1);
    }
    CHECK(fam.phi.assignment() == want);
  }
}

TEST_CASE("arm routings match the frozen arcs") {
  for (const auto& [n, arcs] : fixtures::arcs) {
    auto fam = build_family(n);
    for (const auto& [key, walk] : arcs) {
      auto dash = key.find('-');
      CHECK(fam.x1_over_x0.arc_of(key.substr(0, dash), key.substr(dash + 1)) == testing::split(walk));
    }
  }
}

TEST_CASE("the family map is light and surjective for n = 3..8") {
  for (int n = 3; n <= 8; ++n) {
    auto p = map_properties(build_family(n).phi);
    CHECK(p.light);
    CHECK(p.surjective);
  }
}

TEST_CASE("selection at v0 and the leaves") {
  auto fam = build_family(5);
  const Graph& X0 = *fam.x0.graph;
  std::set<std::size_t> at_v0(fam.selection.at(X0.at("v0")).begin(), fam.selection.at(X0.at("v0")).end());
  std::set<std::size_t> want;
  for (int i = 1; i <= 4; ++i) want.insert(X0.edge_at("v0", vname(i)));
  CHECK(at_v0 == want);
  CHECK(fam.selection.at(X0.at("v6")) == std::vector<std::size_t>{X0.edge_at("v4", "v6")});
  CHECK(fam.selection.at(X0.at("v2")) == std::vector<std::size_t>{X0.edge_at("v0", "v2")});
}

TEST_CASE("n below 3 is rejected") {
  CHECK_THROWS_AS(build_family(2), PreconditionError);
  CHECK_THROWS_AS(expected_dual(2), PreconditionError);
}

TEST_CASE("computed dual equals the formula record") {
  for (int n = 3; n <= 8; ++n) {
    CAPTURE(n);
    auto fam = build_family(n);
    ExpectedDual g = expected_dual(n);
    const Graph& B = *fam.dual.graph;
    const Graph& A = *fam.dual.target.graph;
    REQUIRE(B.vertex_count() == g.star.size());
    std::vector<Index> pin = pin_numbering(g, fam.dual);

    CHECK(B.edge_count() == g.edges.size());
    for (auto [i, j] : g.edges) CHECK(B.adjacent(pin[i], pin[j]));

    for (std::size_t k = 0; k < g.d.size(); ++k) CHECK(A.name(fam.dual.induced[pin[k]]) == indexed("a", g.d[k]));
    CHECK(A.name(fam.dual.induced[pin[0]]) == indexed("a", n - 1));

    // D(X0)
    CHECK(A.edge_count() == g.x0_edges.size());
    for (std::size_t k = 0; k < g.x0_star.size(); ++k) {
      const Edge& e = fam.dual.target.star[A.at(indexed("a", static_cast<long>(k + 1)))];
      NamePair got{fam.x0.graph->name(e.a), fam.x0.graph->name(e.b)};
      NamePair flipped{got.second, got.first};
      CHECK((got == g.x0_star[k] || flipped == g.x0_star[k]));
    }

    // the B-arcs cover the dual and meet only at b0
    std::vector<int> seen(B.vertex_count(), 0);
    for (const auto& arc : g.arcs) {
      CHECK(arc.front() == 0);
      for (std::size_t t = 0; t + 1 < arc.size(); ++t) CHECK(B.adjacent(pin[arc[t]], pin[arc[t + 1]]));
      for (int b : arc) ++seen[pin[b]];
    }
    CHECK(seen[pin[0]] == n);
    for (Index v = 0; v < B.vertex_count(); ++v)
      if (v != pin[0]) CHECK(seen[v] == 1);

    // edge inverses, rows merged by unordered a-pair
    std::map<std::pair<int, int>, std::set<std::pair<Index, Index>>> want;
    for (const auto& row : g.edge_inverses) {
      auto key = std::minmax(row.a_from, row.a_to);
      for (auto [x, y] : row.b_edges) want[key].insert(std::minmax(pin[x], pin[y]));
    }
    std::map<std::pair<int, int>, std::set<std::pair<Index, Index>>> got;
    auto a_index = [&](Index a) { return std::stoi(A.name(a).substr(1)); };
    auto key_of = [&](Index x, Index y) -> std::pair<int, int> { return std::minmax(a_index(x), a_index(y)); };
    for (const auto& e : B.edges()) {
      auto key = key_of(fam.dual.induced[e.a], fam.dual.induced[e.b]);
      got[key].insert(std::minmax(e.a, e.b));
    }
    CHECK(got == want);
  }
}

TEST_CASE("dual sizes") {
  CHECK(build_family(5).dual.graph->vertex_count() == 19);
  auto g3 = expected_dual(3);
  CHECK(g3.arcs.back() == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("the dual is a simple n-od branched at the image of b0") {
  for (int n = 3; n <= 6; ++n) {
    auto fam = build_family(n);
    auto od = recognize_simple_n_od(fam.dual.graph);
    CHECK(od.arm_count() == static_cast<std::size_t>(n));
    auto pin = pin_numbering(expected_dual(n), fam.dual);
    CHECK(od.branch == fam.dual.graph->name(pin[0]));
    CHECK(is_ultra_light(fam.dual.induced));
  }
}

TEST_CASE("lambda is an isomorphism onto the dual") {
  for (int n = 3; n <= 6; ++n) {
    auto fam = build_family(n);
    auto p = map_properties(fam.lambda);
    CHECK(p.light);
    CHECK(p.surjective);
    CHECK(fam.lambda.domain().vertex_count() == fam.dual.graph->vertex_count());
  }
}

}
