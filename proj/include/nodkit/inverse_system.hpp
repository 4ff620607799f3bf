#pragma once

#include <deque>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include "nodkit/graph_io.hpp"
#include "nodkit/subdivision.hpp"
#include "nodkit/vertex_map.hpp"

namespace nodkit {

struct SystemOptions {
  std::size_t edge_guard = 1'000'000;  // total edges over all levels
};

// X_0 <- X_1 <- X_2 <- ... generated from a seed X_1 -> X_0 whose domain
// subdivides its codomain. Level i+1 is the subdivision of the seed matching
// X_i over X_0. Extension is internally synchronized; references to built
// levels stay valid.
class InverseSystem {
 public:
  InverseSystem(SimplicialMap seed, Subdivision witness, SystemOptions opts = {});

  std::size_t depth() const;
  void extend_to(std::size_t depth);  // throws GuardError

  GraphPtr level(std::size_t i) const;
  const SimplicialMap& bonding(std::size_t i) const;  // X_{i+1} -> X_i
  const Subdivision& over_base(std::size_t i) const;  // X_i over X_0
  SimplicialMap composite(std::size_t i, std::size_t j);  // X_j -> X_i, i <= j
  std::size_t total_edges() const;

 private:
  struct Level {
    GraphPtr graph;
    Subdivision over_base;
    std::optional<SimplicialMap> bonding;  // to the previous level
  };
  const Level& get(std::size_t i) const;

  SimplicialMap seed_;
  Subdivision witness_;
  SystemOptions opts_;
  std::unique_ptr<std::recursive_mutex> mu_ = std::make_unique<std::recursive_mutex>();
  std::deque<Level> levels_;
  std::map<std::pair<std::size_t, std::size_t>, SimplicialMap> memo_;
};

InverseSystem generate_system(SimplicialMap seed, Subdivision witness, std::size_t depth, SystemOptions opts = {});

// Writes level_<i>.json (graph), bond_<i>.json (X_{i+1} -> X_i) and
// manifest.json; returns the manifest.
json export_system(InverseSystem& sys, const std::filesystem::path& dir);
json system_manifest(InverseSystem& sys);

}  // namespace nodkit
