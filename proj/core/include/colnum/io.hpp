#pragma once

#include <string>

#include "colnum/graph.hpp"

namespace colnum {

// Accepts two formats, auto-detected:
//   edge list   one "u v" pair per line, '#' comments, optional "n m" header
//               (with a header, endpoints are 0-based integers < n; without,
//               tokens are arbitrary labels mapped by first appearance)
//   DIMACS      "p edge n m" then "e u v" lines, 1-based in the file
// Both reject self-loops and collapse duplicate edges.
Graph parse_graph(const std::string& text);

Graph read_graph_file(const std::string& path);

std::string serialize_edge_list(const Graph& g);
std::string serialize_dimacs(const Graph& g);

}  // namespace colnum
