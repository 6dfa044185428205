#pragma once

#include "purepairs/graph.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace purepairs {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6, per the standard 6-bit encoding (bit-exact).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// Reads every graph6 line of a stream (skipping the optional >>graph6<< header
// and blank lines).
std::vector<Graph> read_graph6_stream(std::istream& in, int max_count = -1);

// Autodetects edge-list vs graph6 from the first line.
Graph read_graph_auto(std::istream& in);
Graph load_graph_file(const std::string& path);

}  // namespace purepairs
