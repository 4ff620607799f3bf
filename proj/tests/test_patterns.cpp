#include <doctest.h>

#include <set>

#include "fixtures/family_fixtures.hpp"
#include "helpers.hpp"
#include "nodkit/error.hpp"
#include "nodkit/family.hpp"
#include "nodkit/patterns.hpp"

using namespace nodkit;
using testing::vwalk;

TEST_SUITE("patterns") {

TEST_CASE("wedge and reverse") {
  CHECK(wedge({"a", "b"}, {"b", "c", "b"}) == Walk{"a", "b", "c", "b"});
  CHECK_THROWS_AS(wedge({"a", "b"}, {"c", "b"}), PatternError);
  CHECK(reverse({"a", "b", "c"}) == Walk{"c", "b", "a"});
}

TEST_CASE("image walks distribute over wedges") {
  auto fam = build_family(4);
  InverseSystem sys = family_system(4);
  sys.extend_to(2);
  auto f = sys.composite(0, 2);
  Walk p = arm_of_level(sys, 4, 2, 1);
  Walk q = reverse(p);
  CHECK(apply_walk(f, wedge(p, q)) == wedge(apply_walk(f, p), apply_walk(f, q)));
  auto bad = VertexMap(fam.x0.graph, fam.x0.graph, std::vector<Index>(fam.x0.graph->vertex_count(), 0));
  CHECK_THROWS_AS(apply_walk(bad, {"v0", "v1"}), PatternError);
}

TEST_CASE("the n = 3, m = 1 trace") {
  CHECK(pattern_direct(3, 1, 3).walk == vwalk("0,2,0,1,0,3,5"));
  CHECK(pattern_recursive(3, 1, 3).walk == vwalk("0,2,0,1,0,3,5"));
}

TEST_CASE("frozen patterns at n = 3, m = 2") {
  for (int i = 1; i <= 3; ++i) CHECK(pattern_direct(3, 2, i).walk == vwalk(fixtures::patterns_n3_m2[i - 1]));
}

TEST_CASE("frozen pattern lengths") {
  for (const auto& [n, rows] : fixtures::pattern_lengths) {
    InverseSystem sys = family_system(n);
    for (int m = 0; m < static_cast<int>(rows.size()); ++m)
      for (int i = 1; i <= n; ++i) CHECK(pattern_direct(sys, n, m, i).walk.size() == rows[m][i - 1]);
  }
}

TEST_CASE("recursion agrees with the generated system") {
  for (int n = 3; n <= 5; ++n) {
    InverseSystem sys = family_system(n);
    auto rec = recursive_patterns(n, 5);
    for (int m = 1; m <= 5; ++m)
      for (int i = 1; i <= n; ++i) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(i);
        CHECK(rec[m][i - 1] == pattern_direct(sys, n, m, i).walk);
      }
  }
}

TEST_CASE("arm n-2 repeats arm n-1 one level down") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 1; m <= 4; ++m) CHECK(pattern_recursive(n, m, n - 2).walk == pattern_recursive(n, m - 1, n - 1).walk);
}

TEST_CASE("endings") {
  for (int n = 3; n <= 5; ++n) {
    for (int m = 1; m <= 4; ++m)
      for (int i = 1; i <= n; ++i) {
        if (i == n - 2) continue;
        const Walk w = pattern_recursive(n, m, i).walk;
        CHECK(w[w.size() - 2] == vname(n));
        CHECK(w.back() == vname(n + 2));
      }
    const Walk w = pattern_recursive(n, 1, n - 2).walk;
    CHECK(w[w.size() - 2] == vname(n - 1));
    CHECK(w.back() == vname(n + 1));
  }
}

TEST_CASE("palindromes") {
  auto p = is_palindrome(vwalk("0,2,4,2,0"));
  CHECK(p.palindrome);
  CHECK(p.center == std::optional<std::string>("v4"));
  CHECK_FALSE(is_palindrome(vwalk("0,2,4,0")).palindrome);
  CHECK(is_palindrome(vwalk("0,2,2,0")).palindrome);
  CHECK_FALSE(is_palindrome(vwalk("0,2,2,0")).center);
}

TEST_CASE("block rule") {
  CHECK(is_block(vwalk("0,2,4,2,0"), 3));
  CHECK(is_block(vwalk("0,2,0,3,5,3,0,2,0"), 3));
  CHECK_FALSE(is_block(vwalk("0,2,0,3,0,2,0,3,0,2,0"), 3));  // centre v2
  CHECK_FALSE(is_block(vwalk("0,2,4,2,0,3,0,2,4,2,0"), 3));  // v4 outranks the centre v3
  CHECK_FALSE(is_block(vwalk("0,1,0"), 3));
}

TEST_CASE("spelled suffix") {
  CHECK(spelled_suffix(3) == vwalk("0,2,0,1,0,3,5"));
  CHECK(spelled_suffix(5) == vwalk("0,4,0,3,0,1,0,2,0,5,7"));
}

TEST_CASE("mined prefix") {
  for (const auto& [n, prefix] : fixtures::mined_prefix) {
    std::vector<Walk> all;
    for (int m = 3; m <= 5; ++m)
      for (int i = 1; i <= n; ++i) all.push_back(pattern_recursive(n, m, i).walk);
    CHECK(mine_common_prefix(all) == vwalk(prefix));
  }
}

TEST_CASE("normal forms at n = 3 use the frozen blocks") {
  std::set<Walk> frozen;
  for (const auto& b : fixtures::blocks_n3) frozen.insert(vwalk(b));
  std::set<Walk> seen;
  for (int m = 3; m <= 6; ++m)
    for (int i = 1; i <= 3; ++i) {
      NormalForm nf = normal_form(pattern_recursive(3, m, i), vwalk(fixtures::mined_prefix.at(3)));
      for (const auto& b : nf.blocks) seen.insert(b);
    }
  CHECK(seen == frozen);
}

TEST_CASE("normal forms reassemble the pattern") {
  for (int n = 3; n <= 5; ++n)
    for (int m = 3; m <= 5; ++m)
      for (int i = 1; i <= n; ++i) {
        ArmPattern p = pattern_recursive(n, m, i);
        NormalForm nf = normal_form(p);
        Walk w = nf.prefix;
        for (const auto& b : nf.blocks) {
          CHECK(is_block(b, n));
          w = wedge(w, b);
        }
        w = wedge(w, nf.suffix);
        CHECK(w == p.walk);
        CHECK(nf.suffix == spelled_suffix(n));
      }
}

TEST_CASE("normal form preconditions") {
  CHECK_THROWS_AS(normal_form(pattern_recursive(4, 2, 1)), PreconditionError);
  ArmPattern p = pattern_recursive(4, 3, 1);
  p.walk.back() = "v5";
  CHECK_THROWS_AS(normal_form(p, vwalk(fixtures::mined_prefix.at(4))), PatternError);
}

}
