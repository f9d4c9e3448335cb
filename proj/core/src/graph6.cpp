#include "kromatic/graph6.hpp"

#include <sstream>

namespace kromatic {

std::string graph6_encode(const Graph& g) {
  if (g.n > kMaxVertices) throw capacity_error("graph6 single-byte size range is 0..62");
  std::string out;
  out.push_back(static_cast<char>(g.n + 63));
  int group = 0, bits = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i) {
      group = group << 1 | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        bits = 0;
      }
    }
  if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
  return out;
}

Graph graph6_decode(const std::string& line) {
  if (line.empty()) throw input_error("empty graph6 line");
  const int n = static_cast<unsigned char>(line[0]) - 63;
  if (n < 0 || n > kMaxVertices) throw input_error("graph6 vertex count byte out of range");
  Graph g(n);
  const std::size_t need = (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6;
  if (line.size() != 1 + need) throw input_error("graph6 line has wrong length");
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
      if (byte < 0 || byte > 63) throw input_error("graph6 byte out of range");
      if (byte >> (5 - bit % 6) & 1) g.add_edge(i, j);
    }
  return g;
}

std::vector<Graph> graph6_read_lines(const std::string& text) {
  std::vector<Graph> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    out.push_back(graph6_decode(line));
  }
  return out;
}

}  // namespace kromatic
