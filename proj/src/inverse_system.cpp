#include "nodkit/inverse_system.hpp"

#include <fstream>

#include "nodkit/error.hpp"

namespace nodkit {

InverseSystem::InverseSystem(SimplicialMap seed, Subdivision witness, SystemOptions opts)
    : seed_(std::move(seed)), witness_(std::move(witness)), opts_(opts) {
  if (!same_graph(witness_.fine, seed_.domain_ptr()) || !same_graph(witness_.coarse, seed_.codomain_ptr()))
    throw SubdivisionError("witness must subdivide the seed's codomain by its domain");
  Report r = check_subdivision(witness_);
  if (!r.ok()) throw SubdivisionError("invalid witness: " + r.violations.front().kind + ": " + r.violations.front().detail);
  levels_.push_back(Level{seed_.codomain_ptr(), identity_subdivision(seed_.codomain_ptr()), std::nullopt});
}

std::size_t InverseSystem::depth() const {
  std::lock_guard lock(*mu_);
  return levels_.size() - 1;
}

std::size_t InverseSystem::total_edges() const {
  std::lock_guard lock(*mu_);
  std::size_t t = 0;
  for (const auto& l : levels_) t += l.graph->edge_count();
  return t;
}

void InverseSystem::extend_to(std::size_t depth) {
  std::lock_guard lock(*mu_);
  while (levels_.size() <= depth) {
    const Level& last = levels_.back();
    std::size_t total = 0, next = 0;
    for (const auto& l : levels_) total += l.graph->edge_count();
    // Each seed edge is refined into its image arc in X_i over X_0.
    for (const auto& e : seed_.domain().edges()) {
      Index x = seed_[e.a], y = seed_[e.b];
      next += x == y ? 1 : last.over_base.arcs[*seed_.codomain().edge_index(x, y)].size() - 1;
    }
    if (total + next > opts_.edge_guard)
      throw GuardError("level " + std::to_string(levels_.size()) + " would bring total edges to " +
                       std::to_string(total + next) + " > " + std::to_string(opts_.edge_guard));
    SubdividedMap sm = subdivide_map(seed_, last.over_base);
    Subdivision over = compose_subdivisions(sm.domain_refinement, witness_);
    GraphPtr g = sm.map.domain_ptr();
    levels_.push_back(Level{g, std::move(over), std::move(sm.map)});
  }
}

const InverseSystem::Level& InverseSystem::get(std::size_t i) const {
  std::lock_guard lock(*mu_);
  if (i >= levels_.size()) throw PreconditionError("level " + std::to_string(i) + " not built");
  return levels_[i];
}

GraphPtr InverseSystem::level(std::size_t i) const { return get(i).graph; }

const SimplicialMap& InverseSystem::bonding(std::size_t i) const { return *get(i + 1).bonding; }

const Subdivision& InverseSystem::over_base(std::size_t i) const { return get(i).over_base; }

SimplicialMap InverseSystem::composite(std::size_t i, std::size_t j) {
  std::lock_guard lock(*mu_);
  if (i > j) throw PreconditionError("composite needs i <= j");
  extend_to(j);
  if (i == j) return identity_map(levels_[i].graph);
  if (auto it = memo_.find({i, j}); it != memo_.end()) return it->second;
  SimplicialMap out = j == i + 1 ? *levels_[j].bonding : compose(composite(i, j - 1), *levels_[j].bonding);
  memo_.emplace(std::make_pair(i, j), out);
  return out;
}

InverseSystem generate_system(SimplicialMap seed, Subdivision witness, std::size_t depth, SystemOptions opts) {
  InverseSystem sys(std::move(seed), std::move(witness), opts);
  sys.extend_to(depth);
  return sys;
}

json system_manifest(InverseSystem& sys) {
  json m;
  json levels = json::array();
  for (std::size_t i = 0; i <= sys.depth(); ++i) {
    json l;
    l["level"] = i;
    l["vertices"] = sys.level(i)->vertex_count();
    l["edges"] = sys.level(i)->edge_count();
    l["graph"] = "level_" + std::to_string(i) + ".json";
    if (i > 0) {
      l["bonding"] = "bond_" + std::to_string(i - 1) + ".json";
      l["bonding_checksum"] = hex64(checksum(sys.bonding(i - 1)));
      l["composite_to_base_checksum"] = hex64(checksum(sys.composite(0, i)));
    }
    levels.push_back(std::move(l));
  }
  m["depth"] = sys.depth();
  m["total_edges"] = sys.total_edges();
  m["levels"] = std::move(levels);
  return m;
}

json export_system(InverseSystem& sys, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (std::size_t i = 0; i <= sys.depth(); ++i) {
    std::ofstream(dir / ("level_" + std::to_string(i) + ".json")) << to_json(*sys.level(i)).dump() << "\n";
    if (i > 0) {
      json b;
      b["domain"] = "level_" + std::to_string(i) + ".json";
      b["codomain"] = "level_" + std::to_string(i - 1) + ".json";
      json a = json::object();
      const auto& f = sys.bonding(i - 1);
      for (Index v = 0; v < f.domain().vertex_count(); ++v) a[f.domain().name(v)] = f.codomain().name(f[v]);
      b["assignment"] = std::move(a);
      std::ofstream(dir / ("bond_" + std::to_string(i - 1) + ".json")) << b.dump() << "\n";
    }
  }
  json m = system_manifest(sys);
  std::ofstream(dir / "manifest.json") << m.dump(2) << "\n";
  return m;
}

}  // namespace nodkit
