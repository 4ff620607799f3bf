#pragma once

#include <string>
#include <vector>

namespace nodkit {

struct Violation {
  std::string kind;
  std::string detail;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string kind, std::string detail) {
    violations.push_back({std::move(kind), std::move(detail)});
  }
  bool has(const std::string& kind) const {
    for (const auto& v : violations)
      if (v.kind == kind) return true;
    return false;
  }
  void absorb(const Report& other, const std::string& prefix = {}) {
    for (const auto& v : other.violations) add(prefix + v.kind, v.detail);
  }
};

}  // namespace nodkit
