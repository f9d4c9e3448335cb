#include "kromatic/generate.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "kromatic/canonical.hpp"
#include "kromatic/graph6.hpp"

namespace kromatic {

namespace {

// Orderly generation by canonical deletion: every canonical (m-1)-vertex
// graph is extended by one vertex with every neighbor mask, masks are taken
// up to the parent's automorphism group, and a child survives iff the new
// vertex lies in the orbit that canonical labeling places last. Each
// isomorphism class then arises exactly once.
std::vector<Graph> next_level(const std::vector<Graph>& parents) {
  std::vector<std::pair<std::string, Graph>> keyed;
  for (const Graph& parent : parents) {
    const int m = parent.n + 1;
    const auto auts = automorphisms(parent);
    const std::uint64_t mask_end = std::uint64_t{1} << parent.n;
    for (std::uint64_t mask = 0; mask < mask_end; ++mask) {
      std::uint64_t rep = mask;
      for (const auto& a : auts) {
        std::uint64_t img = 0;
        for (int v = 0; v < parent.n; ++v)
          if (mask >> v & 1u) img |= std::uint64_t{1} << a[v];
        rep = std::min(rep, img);
      }
      if (rep != mask) continue;

      Graph child(m);
      for (int v = 0; v < parent.n; ++v) child.adj[v] = parent.adj[v];
      for (int v = 0; v < parent.n; ++v)
        if (mask >> v & 1u) child.add_edge(v, m - 1);

      CanonicalForm cf = canonical_form(child);
      if (std::find(cf.last_orbit.begin(), cf.last_orbit.end(), m - 1) ==
          cf.last_orbit.end())
        continue;
      keyed.emplace_back(cf.code(), std::move(cf.graph));
    }
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(keyed.size());
  for (auto& [code, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > kMaxGenerateVertices)
    throw capacity_error("generation supports 1 <= n <= " +
                         std::to_string(kMaxGenerateVertices));
  static std::array<std::vector<Graph>, kMaxGenerateVertices + 1> levels = [] {
    std::array<std::vector<Graph>, kMaxGenerateVertices + 1> l;
    l[1] = {Graph(1)};
    return l;
  }();
  for (int m = 2; m <= n; ++m)
    if (levels[m].empty()) levels[m] = next_level(levels[m - 1]);
  return levels[n];
}

GraphStream::GraphStream(int n) : n_(n) { all_graphs(n); }

std::size_t GraphStream::size() const { return all_graphs(n_).size(); }

const std::vector<Graph>& GraphStream::all() const { return all_graphs(n_); }

std::optional<Graph> GraphStream::next() {
  const auto& graphs = all_graphs(n_);
  if (cursor_ >= graphs.size()) return std::nullopt;
  return graphs[cursor_++];
}

GraphStream generate_all(int n) { return GraphStream(n); }

std::uint64_t count_graphs(int n) { return all_graphs(n).size(); }

}  // namespace kromatic
