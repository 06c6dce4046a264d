#pragma once

#include "eck/colouring.hpp"
#include "eck/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace eck {

// Graph text format:
//   c <comment>            any number of comment lines
//   p <n> <m>              exactly one header line, before any edge
//   e <u> <v>              exactly m edge lines, 0-based vertex ids
// Parse errors carry the 1-based line number. Writing emits the canonical
// edge order, so read(write(g)) == g and rewriting is bit-exact.
Graph read_graph(const std::string& text);
std::string write_graph(const Graph& g);

// Colouring text format: one line per edge, `<u> <v> <colour>`, 0-based
// vertices and 1-based colours, in canonical edge order. Reading accepts the
// lines in any order but requires every edge exactly once; colours only need
// to be positive integers, palette membership is the verifier's job.
std::vector<Colour> read_colouring(const std::string& text, const Graph& g);
std::string write_colouring(const Graph& g, std::span<const Colour> colours);

Graph read_graph_file(const std::string& path);
std::vector<Colour> read_colouring_file(const std::string& path, const Graph& g);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace eck
