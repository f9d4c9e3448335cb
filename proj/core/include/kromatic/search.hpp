#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kromatic/generate.hpp"
#include "kromatic/graph.hpp"

namespace kromatic {

/// One confirmed equal-fingerprint pair of nonisomorphic graphs.
struct PairReport {
  std::string g1, g2;  // canonical graph6, g1 < g2 lexicographically
  int n = 0;
  std::string fingerprint_digest;  // 32 hex chars, shared by both graphs
  bool nonisomorphic = false;      // always true for emitted reports
  std::optional<int> min_edge_deletions;  // within k_max = 3
  int vertex_pair_count = 0;  // |find_ksf_equal_vertex_pairs(g1, g2)|
};

/// All unordered pairs of nonisomorphic n-vertex graphs with equal
/// fingerprints: bucket by digest, confirm by full multiset comparison,
/// report in (g1, g2) lexicographic order.
std::vector<PairReport> search_equal_ksf(int n);

struct VerifyRecord {
  bool fingerprints_equal = false;
  bool nonisomorphic = false;
  bool truncated_series_equal = false;  // mbar expansion at the given bound
  bool csf_equal = false;
};

VerifyRecord verify_pair(const Graph& g1, const Graph& g2, int d);

/// Appends "g6<TAB>digest" lines for stream entries missing from the cache
/// file; idempotent (keyed by canonical graph6). Returns entries written.
/// A malformed existing line is a hard error naming the line number.
std::size_t cache_fingerprints(GraphStream stream, const std::string& cache_path);

}  // namespace kromatic
