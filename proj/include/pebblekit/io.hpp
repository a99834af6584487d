#pragma once

// Text formats for the artifacts the tools exchange.  All four are small
// JSON documents; the savers emit a canonical form (fixed key order,
// two-space indent) so that equal values serialize to equal bytes.
//
//   graph         {"vertex_count": N, "edges": [[u,v],...], "names": [...]}
//   assignment    {"assignment": [v1, v2, ...]}
//   distribution  {"counts": [c0, c1, ...]}
//   certificate   [[from,to], ...]
//
// Loaders throw std::invalid_argument; messages carry the JSON path or byte
// position of the offending element.

#include <filesystem>
#include <string>
#include <vector>

#include "pebblekit/engine.hpp"

namespace pebblekit {

std::string save_graph(const Graph& g);
Graph load_graph(const std::string& text);

std::string save_assignment(const VertexAssignment& a);
VertexAssignment load_assignment(const std::string& text);

std::string save_distribution(const Distribution& d);
Distribution load_distribution(const std::string& text);

std::string save_certificate(const std::vector<Move>& moves);
std::vector<Move> load_certificate(const std::string& text);

// whole-file helpers; errors mention the path
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace pebblekit
