#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

/// Canonical relabeling of a graph: the representative whose upper-triangle
/// bit string (graph6 bit order) is lexicographically least over all
/// relabelings. Two graphs are isomorphic iff their canonical graphs are
/// equal.
struct CanonicalForm {
  Graph graph;            // relabeled representative
  std::vector<int> perm;  // perm[v] = canonical position of source vertex v
  /// Vertices that occupy the last canonical position in some minimal
  /// relabeling; this set is one orbit of the automorphism group.
  std::vector<int> last_orbit;

  /// Canonical graph6 line; equal across a whole isomorphism class.
  std::string code() const;
};

CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// The full automorphism group as explicit vertex permutations, identity
/// included. Exhaustive enumeration; refuses n above `max_n`.
std::vector<std::vector<int>> automorphisms(const Graph& g, int max_n = 12);

/// Orbits of the automorphism group on vertices; orbit[v] = orbit[w] iff some
/// automorphism maps v to w.
std::vector<int> automorphism_orbits(const Graph& g, int max_n = 12);

/// Smallest t <= k_max such that deleting t edges from each side yields
/// isomorphic graphs; nullopt if none within the bound.
std::optional<int> min_edge_deletions_to_isomorphic(const Graph& g, const Graph& h,
                                                    int k_max);

}  // namespace kromatic
