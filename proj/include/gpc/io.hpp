#pragma once

#include "gpc/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace gpc {

inline constexpr std::string_view kGraphFormat = "gpc-graph-v1";

/// gpc-graph-v1 document:
///   {"format":"gpc-graph-v1","vertices":[...],"edges":[["a","b"],...]}
/// Vertices in graph order; each edge smaller label first; edge list sorted.
std::string to_json(const Graph& g, int indent = -1);
/// Throws FormatError on malformed input.
Graph from_json(std::string_view text);

Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

/// Undirected DOT with vertices in graph order and edges in JSON order.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace gpc
