#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nodkit/graph.hpp"
#include "nodkit/inverse_system.hpp"
#include "nodkit/vertex_map.hpp"

namespace nodkit {

// Throws PatternError when p does not end where q starts.
Walk wedge(const Walk& p, const Walk& q);
Walk reverse(Walk p);
// Pointwise image; throws PatternError if two consecutive images coincide.
Walk apply_walk(const VertexMap& f, const Walk& p);

struct ArmPattern {
  int n;
  int m;
  int arm;
  Walk walk;  // in X0, from v0
};

// The system must be seeded with the family map for n.
InverseSystem family_system(int n, SystemOptions opts = {});
// Arm i of X_m over X_0 as a walk in X_m, from v0 to the leaf.
Walk arm_of_level(InverseSystem& sys, int n, int m, int i);

ArmPattern pattern_direct(int n, int m, int i);
ArmPattern pattern_direct(InverseSystem& sys, int n, int m, int i);

// All arms at levels 0..m by the wedge recursion; result[level][arm-1].
std::vector<std::vector<Walk>> recursive_patterns(int n, int m);
ArmPattern pattern_recursive(int n, int m, int i);

struct Palindrome {
  bool palindrome = false;
  std::optional<std::string> center;  // odd-length palindromes only
};
Palindrome is_palindrome(const Walk& p);

struct NormalForm {
  Walk prefix;
  std::vector<Walk> blocks;
  Walk suffix;
};

// <v0, v_{n-1}, v0, v_{n-2}, v0, v1, ..., v0, v_{n-3}, v0, v_n, v_{n+2}>.
Walk spelled_suffix(int n);
// Longest odd palindromic prefix of the longest common prefix.
Walk mine_common_prefix(const std::vector<Walk>& patterns);
// Block rule: odd palindrome whose centre is the only occurrence of the
// block's highest-priority vertex among v_{n+1} > v_{n+2} > v_n.
bool is_block(const Walk& b, int n);

// Throws PreconditionError for m < 3 and PatternError when the pattern does
// not decompose. The one-argument form mines the prefix from all arms at m.
NormalForm normal_form(const ArmPattern& p);
NormalForm normal_form(const ArmPattern& p, const Walk& prefix);

}  // namespace nodkit
