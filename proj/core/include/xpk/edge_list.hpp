#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>

#include "xpk/graph.hpp"

namespace xpk {

// Text format: one edge per line as two whitespace-separated 0-based ids.
// Lines starting with '#' and blank lines are ignored. An optional header
// "n <count>" before the first edge declares the vertex count (so isolated
// vertices survive); without it n = 1 + largest id.
//
// Errors are ParseError / VertexOutOfRange / SelfLoop / DuplicateEdge with the
// 1-based line number in the message.
Graph read_edge_list(std::istream& in);
Graph load_edge_list(const std::filesystem::path& path);

// Writes the header and the canonical edge list; read_edge_list inverts it.
void write_edge_list(std::ostream& out, const Graph& g);
void save_edge_list(const std::filesystem::path& path, const Graph& g);

// 64-bit FNV-1a over the canonical serialization, as 16 hex digits.
std::string fingerprint(const Graph& g);

}  // namespace xpk
