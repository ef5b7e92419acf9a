#pragma once

#include <cstdint>
#include <string>

#include "alphagon/graphs.hpp"
#include "alphagon/scene.hpp"

namespace alphagon {

// Canonical field order, 17 significant digits; parse accepts any order.
std::string scene_to_json(const Scene& s);
Scene scene_from_json(const std::string& text);

void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);  // throws on missing file

// Edge-list text format: "u v" per line, vertex count implied by max index.
std::string graph_to_edge_list(const Graph& g);
Graph graph_from_edge_list(const std::string& text);

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::string file_digest_hex(const std::string& path);

std::string format_double(double v);  // %.17g

}  // namespace alphagon
