#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kromatic {

/// Bad argument (out-of-range vertex, malformed input, mismatched sizes).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Result would exceed a hard size bound (62 vertices, enumeration limits).
class capacity_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Vertex capacity: keeps one adjacency row in a single machine word and
/// matches the single-byte graph6 size range.
inline constexpr int kMaxVertices = 62;

/// Simple undirected graph, one adjacency bitmask per vertex.
/// Rows are symmetric and irreflexive; bits at or above n are zero.
struct Graph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  Graph() = default;
  explicit Graph(int vertices);

  bool has_edge(int u, int v) const { return adj[u] >> v & 1u; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const { return std::popcount(adj[v]); }
  std::uint64_t neighbors(int v) const { return adj[v]; }
  std::uint64_t closed_neighborhood(int v) const {
    return adj[v] | (std::uint64_t{1} << v);
  }
  std::uint64_t full_mask() const { return (std::uint64_t{1} << n) - 1; }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;
};

/// Graph plus positive integer vertex weights (all 1 for unweighted use).
struct WeightedGraph {
  Graph graph;
  std::vector<int> weights;

  WeightedGraph() = default;
  explicit WeightedGraph(Graph g);
  WeightedGraph(Graph g, std::vector<int> w);

  int n() const { return graph.n; }
  int total_weight() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;
};

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges);

/// Induced subgraph on the vertices of `vertex_mask`, kept in ascending order.
Graph induced_subgraph(const Graph& g, std::uint64_t vertex_mask);
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

Graph delete_vertex(const Graph& g, int v);

Graph disjoint_union(const Graph& g, const Graph& h);
WeightedGraph disjoint_union(const WeightedGraph& g, const WeightedGraph& h);

/// Disjoint union plus all edges between the two vertex sets.
Graph join(const Graph& g, const Graph& h);
WeightedGraph join(const WeightedGraph& g, const WeightedGraph& h);

/// Blow vertex i up into a clique of alpha[i] copies (weights inherited);
/// copies of equal-or-adjacent originals are adjacent.
WeightedGraph clan_graph(const WeightedGraph& g, const std::vector<int>& alpha);

}  // namespace kromatic
