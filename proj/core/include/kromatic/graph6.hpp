#pragma once

#include <string>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

/// graph6 line for n <= 62: byte n+63, then the upper-triangle bits
/// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian into 6-bit
/// groups, zero-padded, each group offset by 63.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

std::vector<Graph> graph6_read_lines(const std::string& text);

}  // namespace kromatic
