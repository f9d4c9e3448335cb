#include "kromatic/graph.hpp"

#include <numeric>
#include <string>

namespace kromatic {

Graph::Graph(int vertices) {
  if (vertices < 0 || vertices > kMaxVertices)
    throw capacity_error("vertex count out of range: " + std::to_string(vertices));
  n = vertices;
  adj.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw input_error("edge endpoint out of range");
  if (u == v) throw input_error("self-loop not allowed");
  adj[u] |= std::uint64_t{1} << v;
  adj[v] |= std::uint64_t{1} << u;
}

void Graph::remove_edge(int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n)
    throw input_error("edge endpoint out of range");
  adj[u] &= ~(std::uint64_t{1} << v);
  adj[v] &= ~(std::uint64_t{1} << u);
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

WeightedGraph::WeightedGraph(Graph g)
    : graph(std::move(g)), weights(static_cast<std::size_t>(graph.n), 1) {}

WeightedGraph::WeightedGraph(Graph g, std::vector<int> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.n)
    throw input_error("weight vector length must equal vertex count");
  for (int x : weights)
    if (x < 1) throw input_error("vertex weights must be positive");
}

int WeightedGraph::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0);
}

Graph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph induced_subgraph(const Graph& g, std::uint64_t vertex_mask) {
  if (vertex_mask & ~g.full_mask())
    throw input_error("vertex set not contained in the graph");
  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (vertex_mask >> v & 1u) keep.push_back(v);
  Graph out(static_cast<int>(keep.size()));
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::uint64_t mask = 0;
  for (int v : vertices) {
    if (v < 0 || v >= g.n) throw input_error("vertex out of range");
    mask |= std::uint64_t{1} << v;
  }
  return induced_subgraph(g, mask);
}

Graph delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n) throw input_error("vertex out of range");
  return induced_subgraph(g, g.full_mask() & ~(std::uint64_t{1} << v));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.n + h.n > kMaxVertices)
    throw capacity_error("disjoint union exceeds vertex capacity");
  Graph out(g.n + h.n);
  for (int v = 0; v < g.n; ++v) out.adj[v] = g.adj[v];
  for (int v = 0; v < h.n; ++v) out.adj[g.n + v] = h.adj[v] << g.n;
  return out;
}

WeightedGraph disjoint_union(const WeightedGraph& g, const WeightedGraph& h) {
  std::vector<int> w = g.weights;
  w.insert(w.end(), h.weights.begin(), h.weights.end());
  return {disjoint_union(g.graph, h.graph), std::move(w)};
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const std::uint64_t left = g.full_mask();
  const std::uint64_t right = out.full_mask() & ~left;
  for (int v = 0; v < g.n; ++v) out.adj[v] |= right;
  for (int v = g.n; v < out.n; ++v) out.adj[v] |= left;
  return out;
}

WeightedGraph join(const WeightedGraph& g, const WeightedGraph& h) {
  std::vector<int> w = g.weights;
  w.insert(w.end(), h.weights.begin(), h.weights.end());
  return {join(g.graph, h.graph), std::move(w)};
}

WeightedGraph clan_graph(const WeightedGraph& g, const std::vector<int>& alpha) {
  const int n = g.graph.n;
  if (static_cast<int>(alpha.size()) != n)
    throw input_error("composition length must equal vertex count");
  long long total = 0;
  for (int a : alpha) {
    if (a < 1) throw input_error("composition parts must be positive");
    total += a;
  }
  if (total > kMaxVertices) throw capacity_error("clan graph exceeds vertex capacity");

  Graph out(static_cast<int>(total));
  std::vector<int> weights;
  std::vector<int> origin;
  for (int v = 0; v < n; ++v)
    for (int c = 0; c < alpha[v]; ++c) {
      origin.push_back(v);
      weights.push_back(g.weights[v]);
    }
  for (int i = 0; i < out.n; ++i)
    for (int j = i + 1; j < out.n; ++j)
      if (origin[i] == origin[j] || g.graph.has_edge(origin[i], origin[j]))
        out.add_edge(i, j);
  return {std::move(out), std::move(weights)};
}

}  // namespace kromatic
