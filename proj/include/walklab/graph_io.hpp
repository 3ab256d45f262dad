#pragma once

#include "walklab/graph.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace walklab {

/// Standard graph6 ASCII encoding; a leading ">>graph6<<" header is accepted.
Graph read_graph6(std::string_view text);
std::string write_graph6(const Graph& g, bool with_header = false);

/// "n m" followed by m lines "u v", 0-based.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// graph6 when the text starts with the header or is a single line of graph6
/// characters; edge list otherwise.
Graph read_graph_auto(const std::string& text);
Graph load_graph_file(const std::string& path);

}  // namespace walklab
