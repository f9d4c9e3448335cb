#pragma once

#include <utility>
#include <vector>

#include "kromatic/graph.hpp"
#include "kromatic/sym_series.hpp"

namespace kromatic {

/// Disjoint union of G and H plus all edges between V(H) and V(G) \ {v}.
/// G's vertices keep their indices; H's follow.
Graph attach_except(const Graph& g, int v, const Graph& h);

/// Disjoint union of G and H plus all edges between V(H) and {v}.
Graph attach_to_vertex(const Graph& g, int v, const Graph& h);

/// K-augmented series of attach_except(G, v, H) assembled from the pieces:
/// (f(v, H+v) + X(H)) (.) (f(v, G) + X(G-v)) (.) (mbar_1 + 1) - X(H) (.) X(G-v),
/// everything truncated at d; H+v is H with one extra isolated vertex.
SymSeries gprime_series_formula(const Graph& g, int v, const Graph& h, int d);

/// All (v1, v2) with equal fingerprints of G1 - v1 and G2 - v2.
std::vector<std::pair<int, int>> find_ksf_equal_vertex_pairs(const Graph& g1,
                                                             const Graph& g2);

/// Original vertices become a clique; each original edge v_i v_j (i < j, in
/// ascending order) gains a degree-2 hat vertex adjacent to exactly v_i, v_j.
Graph split_graph(const Graph& g);

/// Edge-swap instance: uz, wz, vw edges; uw, vz non-edges; some automorphism
/// of G - wz exchanges {u,w} with {v,z}.
struct OSInstance {
  Graph g;
  int u = 0, v = 0, w = 0, z = 0;
};

bool check_os(const OSInstance& inst);

/// (G + uw, G + vz); both carry the same chromatic symmetric function.
std::pair<Graph, Graph> os_pair(const OSInstance& inst);

/// True iff some automorphism of G - wz acts pointwise as u<->z, v<->w.
bool os_phi_pointwise(const OSInstance& inst);

/// Claw-margin counts read in G, x ranging over vertices outside {u,v,w,z}:
/// left  = |{x~w : x!~u, x!~v}| + |{x~w : x!~z, x!~v}|,
/// right = |{x~z : x!~u, x!~v}| + |{x~z : x!~u, x!~w}|.
/// Under the pointwise automorphism hypothesis, left != right forces the
/// pair's claw counts (and hence fingerprints) apart.
std::pair<int, int> os_claw_margin(const OSInstance& inst);

/// Hat-swap instance: uv and u'v' non-edges, u -> u' and v -> v' each
/// realized by some automorphism of G.
struct ACSZInstance {
  Graph g;
  int u = 0, v = 0, uprime = 0, vprime = 0;
};

bool check_acsz(const ACSZInstance& inst);

/// (split_graph(G + uv), split_graph(G + u'v')); equal chromatic symmetric
/// functions.
std::pair<Graph, Graph> acsz_pair(const ACSZInstance& inst);

/// Gate under which the split pair provably separates: u,v have a common
/// neighbor, u',v' have none, |V| >= 6, and some common neighbor of u,v has
/// degree >= 3 or deg(u) >= 2 or deg(v) >= 2.
bool check_acsz_distinguishing(const ACSZInstance& inst);

/// Induced copies of the two 7-vertex graphs sharing the independence
/// polynomial 2x^5 + 9x^4 + 16x^3 + 15x^2 + 7x + 1, summed. The pair is
/// resolved once by polynomial census, never hard-coded.
std::uint64_t count_h1_h2(const Graph& g);

/// Exhaustive deterministic scans over all graphs up to max_n and all vertex
/// tuples; one representative per (u,v,w,z) ~ (v,u,z,w) symmetry (OS) resp.
/// per unordered-pair ordering with {u,v} != {u',v'} (ACSZ).
std::vector<OSInstance> find_os_instances(int max_n);
std::vector<ACSZInstance> find_acsz_instances(int max_n);

}  // namespace kromatic
