#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

/// Independence polynomial: coeffs[k] = number of independent vertex sets of
/// size k. coeffs[0] is always 1 (the empty set).
struct Polynomial {
  std::vector<std::uint64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Canonical order: degree first, then coefficient vector lexicographically.
  friend bool operator<(const Polynomial& a, const Polynomial& b) {
    if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
    return a.coeffs < b.coeffs;
  }
};

/// Multiset of independence polynomials over all 2^n induced subgraphs,
/// canonically sorted. Exact equality certificate for the Kromatic symmetric
/// function.
struct Fingerprint {
  std::vector<Polynomial> polys;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

/// Sweep bound for the 2^n induced-subgraph fingerprint.
inline constexpr int kMaxFingerprintVertices = 12;

Polynomial independence_polynomial(const Graph& g);
Fingerprint ksf_fingerprint(const Graph& g);

std::array<std::uint64_t, 2> fingerprint_digest(const Fingerprint& f);
std::string fingerprint_digest_hex(const Fingerprint& f);

/// Number of isomorphism classes on n vertices whose independence polynomial
/// is shared by no other class on n vertices.
std::uint64_t independence_unique_count(int n);

/// All canonical n-vertex graphs with the given independence polynomial.
std::vector<Graph> find_graphs_with_polynomial(int n, const Polynomial& p);

/// Number of vertex subsets S with G[S] isomorphic to P (subsets, not
/// embeddings: a copy with a nontrivial automorphism still counts once).
std::uint64_t count_induced_copies(const Graph& g, const Graph& pattern);

/// Induced claws K_{1,3}: per vertex, independent triples in its neighborhood.
std::uint64_t count_claws(const Graph& g);

}  // namespace kromatic
