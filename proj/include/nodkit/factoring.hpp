#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nodkit/graph_io.hpp"
#include "nodkit/report.hpp"
#include "nodkit/simple_nod.hpp"
#include "nodkit/vertex_map.hpp"

namespace nodkit {

enum class Verdict { found, refuted, inconclusive };
enum class Strategy { congruence, lift };

std::string to_string(Verdict v);
std::string to_string(Strategy s);

// beta o alpha = phi with target a simple-k-od (arcs carry their designated branch).
struct Factorization {
  SimpleNOd target;
  VertexMap alpha;  // domain(phi) -> target
  VertexMap beta;   // target -> codomain(phi)
};

struct ExhaustionCertificate {
  std::string strategy;
  bool anchored = true;
  int k_max = 0;
  std::size_t arm_length_bound = 0;  // lift strategy only
  std::uint64_t candidates = 0;
  std::map<std::string, std::uint64_t> pruned;
  bool complete = false;
  double wall_ms = 0;
  std::size_t domain_vertices = 0;
  std::size_t domain_edges = 0;
};

struct SearchOptions {
  int k_max = 1;
  bool anchored = true;
  Strategy strategy = Strategy::congruence;
  std::optional<std::chrono::milliseconds> timeout;
  unsigned jobs = 1;                              // lift strategy only
  std::optional<std::size_t> arm_length_bound;  // default: domain diameter
};

struct SearchResult {
  Verdict verdict = Verdict::inconclusive;
  std::optional<Factorization> witness;
  ExhaustionCertificate certificate;
};

// Target shape, simpliciality of both maps, pointwise composition and, when
// anchored, beta(branch) = branch of the codomain od.
Report verify_factorization(const SimplicialMap& phi, const Factorization& cand, bool anchored);

// phi must be light and surjective with a tree domain and a simple-n-od
// codomain (PreconditionError otherwise). Found witnesses have the least
// number of arms; the lift strategy also minimises (total arm length,
// lexicographic arm words).
SearchResult search_factorization(const SimplicialMap& phi, const SearchOptions& opts);

// One more arm at the branch, mapped onto the branch's least neighbour.
Factorization pad_with_unit_arm(const Factorization& f);

json to_json(const Factorization& f);
json to_json(const ExhaustionCertificate& c, bool timing);
json to_json(const SearchResult& r, bool timing);

struct FactorRow {
  int k;
  SearchResult congruence;
  SearchResult lift;
  bool agree;
};

struct FactorReportOptions {
  std::optional<std::chrono::milliseconds> timeout;
  unsigned jobs = 1;
  std::optional<std::filesystem::path> certificate_dir;
  bool timing = false;
};

// Anchored searches on the composite X_m -> X_0 of the family for n.
std::vector<FactorRow> factor_report(int n, int m, const std::vector<int>& ks, const FactorReportOptions& opts = {});

}  // namespace nodkit
