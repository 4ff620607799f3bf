#pragma once

#include <string>
#include <string_view>

namespace nodkit {

// Natural order: text runs compare lexicographically, digit runs numerically,
// so "v2" < "v10" and "u9" < "u13". Ties fall back to plain comparison.
int id_compare(std::string_view a, std::string_view b);

inline bool id_less(std::string_view a, std::string_view b) { return id_compare(a, b) < 0; }

struct IdLess {
  using is_transparent = void;
  bool operator()(std::string_view a, std::string_view b) const { return id_less(a, b); }
};

std::string indexed(std::string_view prefix, long i);

}  // namespace nodkit
