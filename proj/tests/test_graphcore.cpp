#include <doctest.h>

#include "helpers.hpp"
#include "nodkit/error.hpp"
#include "nodkit/graph_io.hpp"
#include "nodkit/simple_nod.hpp"
#include "nodkit/simpler.hpp"
#include "nodkit/vertex_map.hpp"

using namespace nodkit;
using testing::path_graph;
using testing::star_graph;

TEST_SUITE("graphcore") {

TEST_CASE("natural identifier order") {
  CHECK(id_less("v2", "v10"));
  CHECK(id_less("u9", "u13"));
  CHECK(id_less("a", "b"));
  CHECK(id_less("t1", "t1x"));
  CHECK_FALSE(id_less("v10", "v10"));
  CHECK(id_compare("v007", "v7") != 0);
  CHECK(indexed("b", 12) == "b12");
}

TEST_CASE("validation kinds") {
  CHECK(validate_graph({{"a", "b"}, {{"a", "b"}}}).ok());
  CHECK(validate_graph({{"a", ""}, {}}).has("empty-identifier"));
  CHECK(validate_graph({{"a", "a"}, {}}).has("duplicate-vertex"));
  CHECK(validate_graph({{"a", "b"}, {{"a", "a"}, {"a", "b"}}}).has("self-loop"));
  CHECK(validate_graph({{"a", "b"}, {{"a", "c"}}}).has("unknown-endpoint"));
  CHECK(validate_graph({{"a", "b"}, {{"a", "b"}, {"b", "a"}}}).has("duplicate-edge"));
  CHECK(validate_graph({{"a", "b", "c"}, {{"a", "b"}}}).has("disconnected"));
  CHECK_THROWS_AS(Graph(GraphData{{"a", "b"}, {}}), GraphError);
}

TEST_CASE("canonical indexing and adjacency") {
  Graph g({"v10", "v2", "v1"}, {{"v10", "v1"}, {"v2", "v1"}});
  CHECK(g.names() == std::vector<std::string>{"v1", "v2", "v10"});
  CHECK(g.degree(g.at("v1")) == 2);
  CHECK(g.adjacent(g.at("v2"), g.at("v1")));
  CHECK_FALSE(g.adjacent(g.at("v2"), g.at("v10")));
  CHECK(g.edge_names(0) == NamePair{"v1", "v2"});
  CHECK(g.is_tree());
  CHECK_THROWS_AS(g.at("v3"), GraphError);
  Graph same({"v1", "v2", "v10"}, {{"v1", "v2"}, {"v1", "v10"}});
  CHECK(g == same);
}

TEST_CASE("walks") {
  auto p = path_graph(3);
  CHECK(is_walk(*p, {"p0", "p1", "p0", "p1", "p2"}));
  CHECK_FALSE(is_walk(*p, {"p0", "p2"}));
  CHECK(walk_names(*p, walk_indices(*p, {"p2", "p1"})) == Walk{"p2", "p1"});
}

TEST_CASE("json round trip and dot") {
  auto s = star_graph({1, 2, 1});
  auto back = graph_from_json(to_json(*s));
  CHECK(*back == *s);
  CHECK_THROWS_AS(graph_from_json(json{{"vertices", {"a", "a"}}, {"edges", json::array()}}), GraphError);
  std::string dot = to_dot(*s, "S");
  CHECK(dot.find("graph \"S\" {") == 0);
  CHECK(dot == to_dot(*back, "S"));
}

TEST_CASE("simple n-od recognition") {
  auto s = recognize_simple_n_od(star_graph({2, 1, 3}));
  CHECK(s.branch == "c");
  REQUIRE(s.arm_count() == 3);
  for (const auto& arm : s.arms) CHECK(arm.front() == "c");

  auto arc = recognize_simple_n_od(path_graph(4));
  CHECK(arc.branch == "p0");
  CHECK(arc.arm_count() == 1);
  auto two = recognize_simple_n_od(path_graph(4), std::string("p2"));
  CHECK(two.arm_count() == 2);

  CHECK_THROWS_AS(recognize_simple_n_od(star_graph({1, 1, 1}), std::string("a1_1")), RecognitionError);
  CHECK_THROWS_AS(recognize_simple_n_od(path_graph(1)), RecognitionError);
  auto cyc = make_graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK_THROWS_AS(recognize_simple_n_od(cyc), RecognitionError);
  auto h = make_graph({"a", "b", "c", "d", "e", "f", "g", "h"},
                      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"d", "e"}, {"e", "f"}, {"e", "g"}, {"e", "h"}});
  CHECK_THROWS_AS(recognize_simple_n_od(h), RecognitionError);
}

TEST_CASE("vertex maps") {
  auto p = path_graph(4);
  auto q = path_graph(2, "q");
  auto fold = SimplicialMap::from_names(p, q, {{"p0", "q0"}, {"p1", "q1"}, {"p2", "q0"}, {"p3", "q1"}});
  auto props = map_properties(fold);
  CHECK(props.simplicial);
  CHECK(props.light);
  CHECK(props.surjective);
  CHECK_FALSE(props.monotone);

  auto collapse = SimplicialMap::from_names(p, q, {{"p0", "q0"}, {"p1", "q0"}, {"p2", "q1"}, {"p3", "q1"}});
  CHECK(map_properties(collapse).monotone);
  CHECK_FALSE(is_light(collapse));

  auto r = path_graph(3, "r");
  CHECK_THROWS_AS(SimplicialMap::from_names(r, p, {{"r0", "p0"}, {"r1", "p2"}, {"r2", "p3"}}), MapError);
  CHECK_THROWS_AS(VertexMap(r, p, {0, 1}), MapError);

  auto id = identity_map(p);
  CHECK(compose(fold, id) == fold);
  CHECK_THROWS_AS(compose(fold, fold), MapError);
}

TEST_CASE("map json and checksum") {
  auto p = path_graph(3);
  auto q = path_graph(2, "q");
  auto f = SimplicialMap::from_names(p, q, {{"p0", "q0"}, {"p1", "q1"}, {"p2", "q0"}});
  json j = to_json(static_cast<const VertexMap&>(f));
  VertexMap g = map_from_json(j);
  CHECK(g == f);
  CHECK(checksum(g) == checksum(f));
  CHECK(hex64(checksum(f)).size() == 16);
}

TEST_CASE("simpler relation") {
  auto arc = path_graph(2, "q");
  auto longer = path_graph(5);
  auto res = is_simpler(arc, longer);
  REQUIRE(res.witness);
  CHECK(map_properties(*res.witness).monotone);
  CHECK(map_properties(*res.witness).surjective);

  CHECK_FALSE(is_simpler(star_graph({1, 1, 1}), path_graph(6)).witness);
  CHECK(is_simpler(star_graph({1, 1, 1}), star_graph({2, 1, 2})).witness);
  CHECK_THROWS_AS(is_simpler(arc, path_graph(40)), GuardError);
}

}
