#pragma once

#include <string>
#include <string_view>

#include "avgpart/graph.hpp"

namespace avgpart {

/// GraphText: a header line "n m" followed by m lines "u v". Lines starting
/// with '#' and blank lines are skipped. Errors carry the 1-based line.
Graph parse_graph(std::string_view text);

/// Canonical GraphText: header, then edges with u < v in sorted order.
std::string format_graph(const Graph& g);

Graph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);
std::string read_text_file(const std::string& path);

}  // namespace avgpart
