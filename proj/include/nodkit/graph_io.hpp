#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <json.hpp>

#include "nodkit/graph.hpp"
#include "nodkit/vertex_map.hpp"

namespace nodkit {

using json = nlohmann::ordered_json;

json to_json(const Graph& g);
GraphData graph_data_from_json(const json& j);
GraphPtr graph_from_json(const json& j);  // throws GraphError on invalid data

json to_json(const VertexMap& f);
VertexMap map_from_json(const json& j);

json walk_to_json(const Walk& w);

// Stable DOT rendering: vertices and edges in canonical order.
std::string to_dot(const Graph& g, std::string_view name = "G");

// FNV-1a over the canonical text of a map's assignment.
std::uint64_t checksum(const VertexMap& f);
std::string hex64(std::uint64_t x);

}  // namespace nodkit
