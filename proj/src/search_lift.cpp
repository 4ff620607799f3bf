// Chooses the arms of the target first. An arm is a label word that some
// domain path can read while rising away from the anchor (a record); a set of
// pairwise prefix-incomparable records spans a star, and the choice succeeds
// when the domain lifts into that star hitting every leaf and the centre.
#include <algorithm>
#include <array>
#include <map>
#include <thread>
#include <unordered_set>

#include "nodkit/error.hpp"
#include "search_internal.hpp"

namespace nodkit::detail {

namespace {

constexpr int kMaxBits = 8;  // centre plus at most seven leaves

struct MaskSet {
  std::array<std::uint64_t, 4> w{};
  bool empty() const { return !(w[0] | w[1] | w[2] | w[3]); }
  void set(unsigned m) { w[m >> 6] |= std::uint64_t{1} << (m & 63); }
  bool test(unsigned m) const { return (w[m >> 6] >> (m & 63)) & 1; }
  MaskSet& operator|=(const MaskSet& o) {
    for (int i = 0; i < 4; ++i) w[i] |= o.w[i];
    return *this;
  }
  template <class F>
  void each(F f) const {
    for (unsigned i = 0; i < 4; ++i)
      for (std::uint64_t b = w[i]; b; b &= b - 1) f(i * 64 + static_cast<unsigned>(__builtin_ctzll(b)));
  }
};

MaskSet convolve(const MaskSet& a, const MaskSet& b) {
  MaskSet r;
  a.each([&](unsigned x) { b.each([&](unsigned y) { r.set(x | y); }); });
  return r;
}

MaskSet single(unsigned m) {
  MaskSet r;
  r.set(m);
  return r;
}

using Word = std::vector<Index>;

struct Records {
  std::vector<Word> words;  // sorted by (length, lexicographic)
  std::vector<int> tin, tout;
  bool truncated = false;

  bool comparable(std::size_t i, std::size_t j) const {
    auto anc = [&](std::size_t a, std::size_t b) { return tin[a] <= tin[b] && tout[b] <= tout[a]; };
    return anc(i, j) || anc(j, i);
  }
};

struct Trie {
  std::vector<std::map<Index, int>> next{{}};
  std::vector<Word> word{{}};
  int child(int v, Index y) {
    auto it = next[v].find(y);
    if (it != next[v].end()) return it->second;
    int c = static_cast<int>(next.size());
    next[v][y] = c;
    next.emplace_back();
    Word w = word[v];
    w.push_back(y);
    word.push_back(std::move(w));
    return c;
  }
};

struct StateHash {
  std::size_t operator()(const std::array<std::uint64_t, 2>& s) const {
    return std::hash<std::uint64_t>{}(s[0] * 0x9e3779b97f4a7c15ULL ^ s[1]);
  }
};

Records collect_records(const Problem& p, Index y0, std::size_t bound) {
  const Graph& D = p.phi.domain();
  Trie trie;
  int root = trie.child(0, y0);
  Records out;
  std::vector<char> is_record(1, 0);
  auto mark = [&](int v) {
    if (is_record.size() < trie.next.size()) is_record.resize(trie.next.size(), 0);
    is_record[v] = 1;
  };
  std::unordered_set<std::array<std::uint64_t, 2>, StateHash> seen;
  struct St {
    Index x, prev;
    std::uint32_t q;
    int node;
  };
  const Index none = static_cast<Index>(-1);
  for (Index s = 0; s < D.vertex_count(); ++s) {
    if (p.phi[s] != y0) continue;
    std::vector<St> stack{{s, none, 0, root}};
    while (!stack.empty()) {
      St st = stack.back();
      stack.pop_back();
      std::array<std::uint64_t, 2> key{(std::uint64_t{st.x} << 32) | st.prev,
                                       (std::uint64_t{st.q} << 32) | static_cast<std::uint32_t>(st.node)};
      if (!seen.insert(key).second) continue;
      const Word& w = trie.word[st.node];
      std::uint32_t top = static_cast<std::uint32_t>(w.size() - 1);
      for (Index c : D.neighbors(st.x)) {
        if (c == st.prev) continue;
        Index y = p.phi[c];
        if (st.q == top) {
          if (top + 1 > bound) {
            out.truncated = true;
          } else {
            int nx = trie.child(st.node, y);
            mark(nx);
            stack.push_back({c, st.x, st.q + 1, nx});
          }
        } else if (trie.word[st.node][st.q + 1] == y) {
          stack.push_back({c, st.x, st.q + 1, st.node});
        }
        if (st.q >= 2 && trie.word[st.node][st.q - 1] == y) stack.push_back({c, st.x, st.q - 1, st.node});
      }
    }
  }
  is_record.resize(trie.next.size(), 0);

  // Euler intervals for prefix tests, then sort by (length, lex).
  std::vector<int> tin(trie.next.size()), tout(trie.next.size());
  int clock = 0;
  std::vector<std::pair<int, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [v, done] = stack.back();
    stack.pop_back();
    if (done) {
      tout[v] = clock++;
      continue;
    }
    tin[v] = clock++;
    stack.push_back({v, true});
    for (auto& [y, c] : trie.next[v]) stack.push_back({c, false});
  }
  std::vector<int> ids;
  for (int v = 0; v < static_cast<int>(is_record.size()); ++v)
    if (is_record[v]) ids.push_back(v);
  std::sort(ids.begin(), ids.end(), [&](int a, int b) {
    const Word& x = trie.word[a];
    const Word& y = trie.word[b];
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  for (int v : ids) {
    out.words.push_back(trie.word[v]);
    out.tin.push_back(tin[v]);
    out.tout.push_back(tout[v]);
  }
  return out;
}

// Labelled target candidate; bit[t] >= 0 marks vertices that must be hit.
struct Target {
  std::vector<Index> lab;
  std::vector<std::vector<Index>> adj;
  std::vector<int> bit;
  std::vector<std::pair<Index, Index>> edges;
  unsigned nbits = 0;

  Index add(Index label, std::optional<Index> parent) {
    Index t = static_cast<Index>(lab.size());
    lab.push_back(label);
    adj.emplace_back();
    bit.push_back(-1);
    if (parent) {
      adj[t].push_back(*parent);
      adj[*parent].push_back(t);
      edges.emplace_back(*parent, t);
    }
    return t;
  }
};

Target star_of(Index y0, const std::vector<const Word*>& arms) {
  Target T;
  T.add(y0, std::nullopt);
  T.bit[0] = 0;
  unsigned b = 1;
  for (const Word* w : arms) {
    Index prev = 0;
    for (std::size_t j = 1; j < w->size(); ++j) prev = T.add((*w)[j], prev);
    T.bit[prev] = static_cast<int>(b++);
  }
  T.nbits = b;
  return T;
}

void add_trie(Target& T, const std::vector<const Word*>& words) {
  std::map<std::pair<Index, Index>, Index> node;
  for (const Word* w : words) {
    Index cur = 0;
    for (std::size_t j = 1; j < w->size(); ++j) {
      auto [it, fresh] = node.try_emplace({cur, (*w)[j]}, 0);
      if (fresh) it->second = T.add((*w)[j], cur);
      cur = it->second;
    }
  }
}

struct Lifter {
  const Problem& p;
  std::vector<std::vector<Index>> children;
  std::vector<Index> post;

  explicit Lifter(const Problem& p_) : p(p_), children(p_.phi.domain().vertex_count()), post(p_.order.rbegin(), p_.order.rend()) {
    for (Index x : p.order)
      if (x != p.root) children[p.parent[x]].push_back(x);
  }

  struct Table {
    std::vector<std::vector<Index>> cand;  // per domain vertex: target vertices with its label
    std::vector<std::vector<MaskSet>> sets;
    std::vector<std::vector<int>> pos;     // target vertex -> slot, per domain vertex label
  };

  MaskSet child_sets(const Table& tb, const Target& T, Index c, Index t) const {
    MaskSet cm;
    for (Index nb : T.adj[t]) {
      int s = tb.pos[c][nb];
      if (s >= 0) cm |= tb.sets[c][static_cast<std::size_t>(s)];
    }
    return cm;
  }

  // Masks of required vertices hit by a lift of each rooted subtree.
  bool solve(const Target& T, Table& tb) const {
    const Graph& D = p.phi.domain();
    std::vector<std::vector<Index>> by_label(p.phi.codomain().vertex_count());
    for (Index t = 0; t < T.lab.size(); ++t) by_label[T.lab[t]].push_back(t);
    tb.cand.assign(D.vertex_count(), {});
    tb.sets.assign(D.vertex_count(), {});
    tb.pos.assign(D.vertex_count(), {});
    for (Index x : post) {
      const auto& cands = by_label[p.phi[x]];
      std::vector<int> pos(T.lab.size(), -1);
      for (Index t : cands) {
        MaskSet ms = single(T.bit[t] >= 0 ? 1u << T.bit[t] : 0u);
        bool ok = true;
        for (Index c : children[x]) {
          MaskSet cm = child_sets(tb, T, c, t);
          if (cm.empty()) {
            ok = false;
            break;
          }
          ms = convolve(ms, cm);
        }
        if (!ok) continue;
        pos[t] = static_cast<int>(tb.cand[x].size());
        tb.cand[x].push_back(t);
        tb.sets[x].push_back(ms);
      }
      if (tb.cand[x].empty()) return false;
      tb.pos[x] = std::move(pos);
    }
    unsigned full = (1u << T.nbits) - 1;
    for (const auto& ms : tb.sets[p.root])
      if (ms.test(full)) return true;
    return false;
  }

  void extract(const Target& T, const Table& tb, Index x, Index t, unsigned need, std::vector<Index>& alpha) const {
    alpha[x] = t;
    const auto& ch = children[x];
    std::vector<MaskSet> reach{single(T.bit[t] >= 0 ? 1u << T.bit[t] : 0u)};
    std::vector<MaskSet> cms;
    for (Index c : ch) {
      cms.push_back(child_sets(tb, T, c, t));
      reach.push_back(convolve(reach.back(), cms.back()));
    }
    std::vector<unsigned> pick(ch.size());
    unsigned target = need;
    for (std::size_t i = ch.size(); i-- > 0;) {
      bool done = false;
      cms[i].each([&](unsigned m) {
        if (done || (m & ~target)) return;
        for (unsigned a = target;; a = (a - 1) & target) {
          if (reach[i].test(a) && (a | m) == target) {
            pick[i] = m;
            target = a;
            done = true;
            return;
          }
          if (a == 0) break;
        }
      });
    }
    for (std::size_t i = 0; i < ch.size(); ++i) {
      Index c = ch[i];
      for (Index nb : T.adj[t]) {
        int s = tb.pos[c][nb];
        if (s >= 0 && tb.sets[c][static_cast<std::size_t>(s)].test(pick[i])) {
          extract(T, tb, c, nb, pick[i], alpha);
          break;
        }
      }
    }
  }

  std::vector<Index> witness(const Target& T, const Table& tb) const {
    unsigned full = (1u << T.nbits) - 1;
    std::vector<Index> alpha(p.phi.domain().vertex_count(), 0);
    for (std::size_t i = 0; i < tb.cand[p.root].size(); ++i)
      if (tb.sets[p.root][i].test(full)) {
        extract(T, tb, p.root, tb.cand[p.root][i], full, alpha);
        break;
      }
    return alpha;
  }
};

struct Best {
  std::size_t total = 0;
  std::vector<Word> arms;
  Index y0 = 0;
  bool beats(std::size_t tot, const std::vector<Word>& a, Index y) const {
    if (tot != total) return tot < total;
    if (a != arms) return a < arms;
    return y < y0;
  }
};

struct Worker {
  const Problem& p;
  const Lifter& lifter;
  const Records& R;
  Index y0;
  int size;
  unsigned stride, offset;
  Deadline dl;

  Worker(const Problem& p_, const Lifter& l, const Records& r, Index y, int s, unsigned st, unsigned off, Deadline d)
      : p(p_), lifter(l), R(r), y0(y), size(s), stride(st), offset(off), dl(d) {}

  std::optional<Best> best;
  std::uint64_t candidates = 0;
  std::map<std::string, std::uint64_t> pruned;
  bool timed_out = false;
  std::vector<std::size_t> chosen;
  Lifter::Table tb;

  std::vector<const Word*> words_of(const std::vector<std::size_t>& ix) const {
    std::vector<const Word*> w;
    for (auto i : ix) w.push_back(&R.words[i]);
    return w;
  }

  bool incomparable(std::size_t j) const {
    for (auto c : chosen)
      if (R.comparable(c, j)) return false;
    return true;
  }

  void dfs(std::size_t start, std::size_t total) {
    for (std::size_t ix = start; ix < R.words.size(); ++ix) {
      if (chosen.empty() && ix % stride != offset) continue;
      if ((candidates & 255) == 0 && dl.expired()) timed_out = true;
      if (timed_out) return;
      if (!incomparable(ix)) continue;
      std::size_t len = R.words[ix].size() - 1;
      std::size_t left = static_cast<std::size_t>(size) - chosen.size();
      if (best && total + left * len > best->total) {
        ++pruned["length-bound"];
        return;
      }
      chosen.push_back(ix);
      ++candidates;
      if (chosen.size() == static_cast<std::size_t>(size)) {
        Target T = star_of(y0, words_of(chosen));
        std::vector<Word> arms;
        for (auto c : chosen) arms.push_back(R.words[c]);
        if (!best || best->beats(total + len, arms, y0)) {
          if (lifter.solve(T, tb))
            best = Best{total + len, std::move(arms), y0};
          else
            ++pruned["no-lift"];
        }
      } else {
        std::vector<std::size_t> rem;
        for (std::size_t j = ix + 1; j < R.words.size(); ++j)
          if (incomparable(j)) rem.push_back(j);
        if (rem.size() < left - 1) {
          ++pruned["exhausted"];
        } else {
          Target T = star_of(y0, words_of(chosen));
          add_trie(T, words_of(rem));
          if (lifter.solve(T, tb))
            dfs(ix + 1, total + len);
          else
            ++pruned["relaxation"];
        }
      }
      chosen.pop_back();
      if (timed_out) return;
    }
  }
};

}  // namespace

SearchResult search_lift(const Problem& p, const SearchOptions& opts, Deadline dl) {
  if (opts.k_max + 1 > kMaxBits) throw PreconditionError("lift strategy supports at most 7 arms");
  const Graph& D = p.phi.domain();
  const Graph& C = p.phi.codomain();

  // Diameter of the domain tree: no record can be longer.
  auto farthest = [&](Index s) {
    std::vector<std::size_t> dist(D.vertex_count(), SIZE_MAX);
    std::vector<Index> q{s};
    dist[s] = 0;
    Index far = s;
    for (std::size_t h = 0; h < q.size(); ++h) {
      Index x = q[h];
      if (dist[x] > dist[far]) far = x;
      for (Index y : D.neighbors(x))
        if (dist[y] == SIZE_MAX) {
          dist[y] = dist[x] + 1;
          q.push_back(y);
        }
    }
    return std::pair{far, dist[far]};
  };
  std::size_t diameter = farthest(farthest(0).first).second;
  std::size_t bound = opts.arm_length_bound.value_or(diameter);

  std::vector<Index> anchors;
  if (opts.anchored)
    anchors.push_back(p.anchor);
  else
    for (Index y = 0; y < C.vertex_count(); ++y) anchors.push_back(y);

  std::vector<Records> recs;
  bool truncated = false;
  for (Index y : anchors) {
    recs.push_back(collect_records(p, y, bound));
    truncated = truncated || recs.back().truncated;
  }

  Lifter lifter(p);
  SearchResult res;
  auto& cert = res.certificate;
  cert.arm_length_bound = bound;
  bool timed_out = false;
  std::optional<Best> best;
  unsigned jobs = std::max(1u, opts.jobs);

  for (int size = 1; size <= opts.k_max && !best && !timed_out; ++size) {
    for (std::size_t a = 0; a < anchors.size() && !timed_out; ++a) {
      std::vector<Worker> ws;
      for (unsigned j = 0; j < jobs; ++j) ws.emplace_back(p, lifter, recs[a], anchors[a], size, jobs, j, dl);
      if (jobs == 1) {
        ws[0].dfs(0, 0);
      } else {
        std::vector<std::thread> th;
        for (auto& w : ws) th.emplace_back([&w] { w.dfs(0, 0); });
        for (auto& t : th) t.join();
      }
      for (auto& w : ws) {
        cert.candidates += w.candidates;
        for (auto& [k, v] : w.pruned) cert.pruned[k] += v;
        timed_out = timed_out || w.timed_out;
        if (w.best && (!best || best->beats(w.best->total, w.best->arms, w.best->y0))) best = w.best;
      }
    }
  }

  cert.complete = !timed_out && !truncated;
  if (!best) {
    res.verdict = cert.complete ? Verdict::refuted : Verdict::inconclusive;
    return res;
  }
  std::vector<const Word*> arms;
  for (const auto& w : best->arms) arms.push_back(&w);
  Target T = star_of(best->y0, arms);
  Lifter::Table tb;
  if (!lifter.solve(T, tb)) throw Error("internal: lift vanished");
  std::vector<Index> alpha = lifter.witness(T, tb);
  res.verdict = Verdict::found;
  res.witness = make_factorization(p.phi, T.lab, T.edges, 0, alpha);
  return res;
}

}  // namespace nodkit::detail
