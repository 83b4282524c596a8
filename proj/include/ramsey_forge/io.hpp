#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ramsey_forge/coloring.hpp"
#include "ramsey_forge/graph.hpp"

namespace ramsey_forge {

// Coloring format:
//
//   s n
//   c(0,1) c(0,2) ... c(0,s-1)
//   c(1,2) ... c(1,s-1)
//   ...
//   c(s-2,s-1)
//
// Single spaces, no trailing spaces, every line newline-terminated.
std::string format_coloring(const EdgeColoring& c);
EdgeColoring parse_coloring(std::string_view text);

// Graph format: "p <vertices> <edges>" followed by one "e u v" line per
// edge with 0-based u < v, written in lexicographic order.
std::string format_graph(const Graph& g);
Graph parse_graph(std::string_view text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

EdgeColoring read_coloring(const std::filesystem::path& path);
void write_coloring(const EdgeColoring& c, const std::filesystem::path& path);

Graph read_graph(const std::filesystem::path& path);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace ramsey_forge
