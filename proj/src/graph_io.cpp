#include "nodkit/graph_io.hpp"

#include <cstdio>
#include <sstream>

#include "nodkit/error.hpp"

namespace nodkit {

json to_json(const Graph& g) {
  json j;
  j["vertices"] = g.names();
  json edges = json::array();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_names(e);
    edges.push_back({a, b});
  }
  j["edges"] = std::move(edges);
  return j;
}

GraphData graph_data_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw GraphError("graph JSON needs \"vertices\" and \"edges\"");
  GraphData d;
  for (const auto& v : j.at("vertices")) d.vertices.push_back(v.get<std::string>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair");
    d.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return d;
}

GraphPtr graph_from_json(const json& j) {
  GraphData d = graph_data_from_json(j);
  Report r = validate_graph(d);
  if (!r.ok()) throw GraphError(r.violations.front().kind + ": " + r.violations.front().detail);
  return std::make_shared<const Graph>(d);
}

json to_json(const VertexMap& f) {
  json j;
  j["domain"] = to_json(f.domain());
  j["codomain"] = to_json(f.codomain());
  json a = json::object();
  for (Index v = 0; v < f.domain().vertex_count(); ++v) a[f.domain().name(v)] = f.codomain().name(f[v]);
  j["assignment"] = std::move(a);
  return j;
}

VertexMap map_from_json(const json& j) {
  GraphPtr d = graph_from_json(j.at("domain"));
  GraphPtr c = graph_from_json(j.at("codomain"));
  std::map<std::string, std::string> a;
  for (auto it = j.at("assignment").begin(); it != j.at("assignment").end(); ++it)
    a.emplace(it.key(), it.value().get<std::string>());
  return VertexMap::from_names(d, c, a);
}

json walk_to_json(const Walk& w) { return json(w); }

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (const auto& v : g.names()) os << "  \"" << v << "\";\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [a, b] = g.edge_names(e);
    os << "  \"" << a << "\" -- \"" << b << "\";\n";
  }
  os << "}\n";
  return os.str();
}

std::uint64_t checksum(const VertexMap& f) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  for (Index v = 0; v < f.domain().vertex_count(); ++v) {
    feed(f.domain().name(v));
    feed("=");
    feed(f.codomain().name(f[v]));
    feed(";");
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace nodkit
