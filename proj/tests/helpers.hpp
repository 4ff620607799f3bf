#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "nodkit/graph.hpp"
#include "nodkit/ids.hpp"

namespace testing {

inline nodkit::GraphPtr path_graph(int k, const std::string& prefix = "p") {
  std::vector<std::string> vs;
  std::vector<nodkit::NamePair> es;
  for (int i = 0; i < k; ++i) vs.push_back(nodkit::indexed(prefix, i));
  for (int i = 0; i + 1 < k; ++i) es.emplace_back(vs[i], vs[i + 1]);
  return nodkit::make_graph(vs, es);
}

// centre c, arms of the given lengths: c - a1_1 - a1_2 ..., c - a2_1 ...
inline nodkit::GraphPtr star_graph(const std::vector<int>& lengths) {
  std::vector<std::string> vs{"c"};
  std::vector<nodkit::NamePair> es;
  for (std::size_t a = 0; a < lengths.size(); ++a) {
    std::string prev = "c";
    for (int j = 1; j <= lengths[a]; ++j) {
      std::string v = "a" + std::to_string(a + 1) + "_" + std::to_string(j);
      vs.push_back(v);
      es.emplace_back(prev, v);
      prev = v;
    }
  }
  return nodkit::make_graph(vs, es);
}

inline std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string t;
  while (std::getline(ss, t, sep))
    if (!t.empty()) out.push_back(t);
  return out;
}

inline nodkit::Walk vwalk(const std::string& indices) {
  nodkit::Walk w;
  for (const auto& t : split(indices)) w.push_back("v" + t);
  return w;
}

}  // namespace testing
