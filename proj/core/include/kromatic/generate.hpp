#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

/// Desk-scale bound for exhaustive generation.
inline constexpr int kMaxGenerateVertices = 9;

/// All simple graphs on `n` vertices, one canonical representative per
/// isomorphism class, materialized in the shared level cache. Ascending by
/// canonical code, so rerunning yields the identical sequence.
const std::vector<Graph>& all_graphs(int n);

/// Resumable cursor over the representatives of one level.
class GraphStream {
 public:
  explicit GraphStream(int n);

  int vertex_count() const { return n_; }
  std::size_t size() const;
  std::optional<Graph> next();
  void reset() { cursor_ = 0; }
  const std::vector<Graph>& all() const;

 private:
  int n_;
  std::size_t cursor_ = 0;
};

GraphStream generate_all(int n);
std::uint64_t count_graphs(int n);

}  // namespace kromatic
