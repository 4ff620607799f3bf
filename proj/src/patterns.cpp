#include "nodkit/patterns.hpp"

#include <algorithm>

#include "nodkit/error.hpp"
#include "nodkit/family.hpp"

namespace nodkit {

Walk wedge(const Walk& p, const Walk& q) {
  if (p.empty() || q.empty() || p.back() != q.front())
    throw PatternError("wedge: junction mismatch (" + (p.empty() ? std::string("-") : p.back()) + " vs " +
                       (q.empty() ? std::string("-") : q.front()) + ")");
  Walk out(p);
  out.insert(out.end(), q.begin() + 1, q.end());
  return out;
}

Walk reverse(Walk p) {
  std::reverse(p.begin(), p.end());
  return p;
}

Walk apply_walk(const VertexMap& f, const Walk& p) {
  Walk out;
  out.reserve(p.size());
  for (const auto& x : p) {
    const std::string& y = f.image_of(x);
    if (!out.empty() && out.back() == y) throw PatternError("apply_walk: map collapses an edge at " + x);
    out.push_back(y);
  }
  return out;
}

InverseSystem family_system(int n, SystemOptions opts) {
  FamilyBundle fam = build_family(n);
  return InverseSystem(fam.phi, fam.x1_over_x0, opts);
}

namespace {

void check_arm(int n, int m, int i) {
  if (n < 3) throw PreconditionError("n must be at least 3");
  if (m < 0) throw PreconditionError("m must be nonnegative");
  if (i < 1 || i > n) throw PreconditionError("arm must lie in 1..n");
}

}  // namespace

Walk arm_of_level(InverseSystem& sys, int n, int m, int i) {
  check_arm(n, m, i);
  sys.extend_to(static_cast<std::size_t>(m));
  const Subdivision& over = sys.over_base(static_cast<std::size_t>(m));
  Walk w = over.arc_of(vname(0), vname(i));
  if (i == n - 1) w = wedge(w, over.arc_of(vname(n - 1), vname(n + 1)));
  if (i == n) w = wedge(w, over.arc_of(vname(n), vname(n + 2)));
  return w;
}

ArmPattern pattern_direct(InverseSystem& sys, int n, int m, int i) {
  Walk arm = arm_of_level(sys, n, m, i);
  SimplicialMap phi = sys.composite(0, static_cast<std::size_t>(m));
  return ArmPattern{n, m, i, apply_walk(phi, arm)};
}

ArmPattern pattern_direct(int n, int m, int i) {
  check_arm(n, m, i);
  InverseSystem sys = family_system(n);
  return pattern_direct(sys, n, m, i);
}

std::vector<std::vector<Walk>> recursive_patterns(int n, int m) {
  check_arm(n, m, 1);
  std::vector<std::vector<Walk>> P(1);
  for (int i = 1; i <= n - 2; ++i) P[0].push_back({vname(0), vname(i)});
  P[0].push_back({vname(0), vname(n - 1), vname(n + 1)});
  P[0].push_back({vname(0), vname(n), vname(n + 2)});

  for (int level = 1; level <= m; ++level) {
    const auto& prev = P.back();
    auto arm = [&](int i) -> const Walk& { return prev[static_cast<std::size_t>(i - 1)]; };
    auto there_and_back = [](const Walk& w) { return wedge(w, reverse(w)); };
    Walk pre(arm(n - 1).begin(), arm(n - 1).end() - 1);
    Walk head = there_and_back(pre);

    std::vector<Walk> next(static_cast<std::size_t>(n));
    for (int i = 1; i <= n - 3; ++i) {
      Walk w = head;
      int q = i;
      for (int j = 0; j <= n - 3; ++j) {
        w = wedge(w, there_and_back(arm(q)));
        q = cyclic_successor(q, n);
      }
      next[static_cast<std::size_t>(i - 1)] = wedge(w, arm(n));
    }
    next[static_cast<std::size_t>(n - 3)] = arm(n - 1);
    next[static_cast<std::size_t>(n - 2)] = wedge(head, arm(n));
    Walk w = wedge(head, there_and_back(arm(n - 2)));
    for (int j = 1; j <= n - 3; ++j) w = wedge(w, there_and_back(arm(j)));
    next[static_cast<std::size_t>(n - 1)] = wedge(w, arm(n));
    P.push_back(std::move(next));
  }
  return P;
}

ArmPattern pattern_recursive(int n, int m, int i) {
  check_arm(n, m, i);
  auto P = recursive_patterns(n, m);
  return ArmPattern{n, m, i, P[static_cast<std::size_t>(m)][static_cast<std::size_t>(i - 1)]};
}

Palindrome is_palindrome(const Walk& p) {
  Palindrome r;
  r.palindrome = std::equal(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(p.size() / 2), p.rbegin());
  if (r.palindrome && p.size() % 2 == 1) r.center = p[p.size() / 2];
  return r;
}

Walk spelled_suffix(int n) {
  Walk s{vname(0), vname(n - 1), vname(0), vname(n - 2)};
  for (int j = 1; j <= n - 3; ++j) {
    s.push_back(vname(0));
    s.push_back(vname(j));
  }
  s.push_back(vname(0));
  s.push_back(vname(n));
  s.push_back(vname(n + 2));
  return s;
}

Walk mine_common_prefix(const std::vector<Walk>& patterns) {
  if (patterns.empty()) return {};
  std::size_t len = patterns[0].size();
  for (const auto& p : patterns) {
    std::size_t k = 0;
    while (k < len && k < p.size() && p[k] == patterns[0][k]) ++k;
    len = k;
  }
  for (std::size_t l = len; l >= 1; --l) {
    if (l % 2 == 0) continue;
    Walk cand(patterns[0].begin(), patterns[0].begin() + static_cast<std::ptrdiff_t>(l));
    if (is_palindrome(cand).palindrome) return cand;
  }
  return {};
}

bool is_block(const Walk& b, int n) {
  if (b.size() < 3 || b.size() % 2 == 0) return false;
  auto pal = is_palindrome(b);
  if (!pal.palindrome) return false;
  for (int h : {n + 1, n + 2, n}) {
    auto c = std::count(b.begin(), b.end(), vname(h));
    if (c == 0) continue;
    return c == 1 && *pal.center == vname(h);
  }
  return false;
}

NormalForm normal_form(const ArmPattern& p, const Walk& prefix) {
  if (p.m < 3) throw PreconditionError("normal_form needs m >= 3, got m = " + std::to_string(p.m));
  const Walk& w = p.walk;
  Walk suffix = spelled_suffix(p.n);
  if (prefix.empty() || w.size() < prefix.size() + suffix.size() - 1)
    throw PatternError("pattern too short for prefix and suffix");
  if (!std::equal(prefix.begin(), prefix.end(), w.begin())) throw PatternError("pattern does not start with the prefix");
  if (!std::equal(suffix.rbegin(), suffix.rend(), w.rbegin())) throw PatternError("pattern does not end with the suffix");

  NormalForm nf{prefix, {}, suffix};
  std::size_t start = prefix.size() - 1;
  std::size_t stop = w.size() - suffix.size();  // index of the suffix's first vertex
  if (start > stop) throw PatternError("prefix and suffix overlap");
  while (start < stop) {
    bool found = false;
    for (std::size_t end = start + 2; end <= stop; end += 2) {
      Walk b(w.begin() + static_cast<std::ptrdiff_t>(start), w.begin() + static_cast<std::ptrdiff_t>(end) + 1);
      if (is_block(b, p.n)) {
        nf.blocks.push_back(std::move(b));
        start = end;
        found = true;
        break;
      }
    }
    if (!found)
      throw PatternError("no block starts at position " + std::to_string(start) + " of pattern (" + std::to_string(p.n) +
                         "," + std::to_string(p.m) + "," + std::to_string(p.arm) + ")");
  }
  return nf;
}

NormalForm normal_form(const ArmPattern& p) {
  if (p.m < 3) throw PreconditionError("normal_form needs m >= 3, got m = " + std::to_string(p.m));
  auto P = recursive_patterns(p.n, p.m);
  return normal_form(p, mine_common_prefix(P[static_cast<std::size_t>(p.m)]));
}

}  // namespace nodkit
