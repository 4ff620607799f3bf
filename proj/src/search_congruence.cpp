// Grows the target tree leaf by leaf while walking the domain in preorder:
// each domain vertex lands on an existing neighbour of its parent's image with
// the right label, or on a fresh leaf there.
#include <map>

#include "search_internal.hpp"

namespace nodkit::detail {

namespace {

struct Congruence {
  const Problem& p;
  const Graph& D;
  int k;
  bool anchored;
  Deadline dl;

  std::vector<Index> lab;
  std::vector<std::vector<Index>> adj;
  std::vector<std::pair<Index, Index>> tedges;
  std::vector<Index> alpha;
  int big = 0;
  Index bigv = 0;

  std::uint64_t nodes = 0;
  std::map<std::string, std::uint64_t> pruned;
  bool timed_out = false;

  Congruence(const Problem& p_, int k_, bool anchored_, Deadline dl_)
      : p(p_), D(p_.phi.domain()), k(k_), anchored(anchored_), dl(dl_), alpha(D.vertex_count(), 0) {}

  bool finished() {
    if (big > 0) return true;
    if (!anchored) return true;
    for (Index t = 0; t < lab.size(); ++t)
      if (lab[t] == p.anchor && (k >= 2 || adj[t].size() <= 1)) return true;
    ++pruned["arc-anchor"];
    return false;
  }

  bool admits_leaf_at(Index tau) {
    std::size_t d = adj[tau].size() + 1;
    if (d <= 2) return true;
    if (k <= 2 || static_cast<int>(d) > k) {
      ++pruned["degree"];
      return false;
    }
    if (d == 3 && big >= 1) {
      ++pruned["branch-count"];
      return false;
    }
    if (anchored && lab[tau] != p.anchor) {
      ++pruned["anchor"];
      return false;
    }
    return true;
  }

  bool dfs(std::size_t pos) {
    if ((++nodes & 1023) == 0 && dl.expired()) timed_out = true;
    if (timed_out) return false;
    if (pos == p.order.size()) return finished();

    Index x = p.order[pos];
    Index tau = alpha[p.parent[x]];
    Index want = p.phi[x];
    std::size_t existing = adj[tau].size();
    for (std::size_t i = 0; i < existing; ++i) {
      Index t = adj[tau][i];
      if (lab[t] != want) continue;
      alpha[x] = t;
      if (dfs(pos + 1)) return true;
      if (timed_out) return false;
    }
    if (!admits_leaf_at(tau)) return false;

    Index t = static_cast<Index>(lab.size());
    bool grows_branch = adj[tau].size() + 1 == 3;
    lab.push_back(want);
    adj.push_back({tau});
    adj[tau].push_back(t);
    tedges.emplace_back(tau, t);
    if (grows_branch) {
      ++big;
      bigv = tau;
    }
    alpha[x] = t;
    if (dfs(pos + 1)) return true;
    if (grows_branch) --big;
    tedges.pop_back();
    adj[tau].pop_back();
    adj.pop_back();
    lab.pop_back();
    return false;
  }

  bool run() {
    Index r = p.order[0];
    lab = {p.phi[r]};
    adj = {{}};
    alpha[r] = 0;
    return dfs(1);
  }

  Index branch() const {
    if (big > 0) return bigv;
    std::optional<Index> any;
    for (Index t = 0; t < lab.size(); ++t) {
      bool end = adj[t].size() <= 1;
      if (anchored && lab[t] != p.anchor) continue;
      if (end) return t;
      if (!any) any = t;
    }
    return *any;
  }
};

SearchResult run_once(const Problem& p, int k, bool anchored, Deadline dl) {
  Congruence s(p, k, anchored, dl);
  bool ok = s.run();
  SearchResult res;
  res.certificate.candidates = s.nodes;
  res.certificate.pruned = s.pruned;
  res.certificate.complete = !s.timed_out;
  if (ok) {
    res.verdict = Verdict::found;
    res.witness = make_factorization(p.phi, s.lab, s.tedges, s.branch(), s.alpha);
  } else {
    res.verdict = s.timed_out ? Verdict::inconclusive : Verdict::refuted;
  }
  return res;
}

}  // namespace

SearchResult search_congruence(const Problem& p, const SearchOptions& opts, Deadline dl) {
  SearchResult top = run_once(p, opts.k_max, opts.anchored, dl);
  if (top.verdict != Verdict::found) return top;
  for (int k = 1; k < opts.k_max; ++k) {
    SearchResult r = run_once(p, k, opts.anchored, dl);
    if (r.verdict == Verdict::found) return r;
    if (r.verdict == Verdict::inconclusive) break;
  }
  return top;
}

}  // namespace nodkit::detail
