#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "dact/graph.hpp"

namespace dact {

// Format:
//   vertices N
//   edge <id> <u> <v> [name]
// '#' starts a comment. Either every edge carries a name or none does.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
// Canonical text; parse_graph(format_graph(g)) reproduces g.
std::string format_graph(const Graph& g);

std::string read_text_file(const std::string& path);

}  // namespace dact
