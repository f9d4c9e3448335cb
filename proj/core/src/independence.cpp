#include "kromatic/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <unordered_map>

#include "kromatic/canonical.hpp"
#include "kromatic/digest.hpp"
#include "kromatic/generate.hpp"

namespace kromatic {

namespace {

Polynomial shift_add(const Polynomial& a, const Polynomial& b) {
  // a + x*b
  Polynomial out;
  out.coeffs.assign(std::max(a.coeffs.size(), b.coeffs.size() + 1), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i + 1] += b.coeffs[i];
  return out;
}

}  // namespace

Polynomial independence_polynomial(const Graph& g) {
  // Deletion recursion I(S) = I(S - v) + x * I(S - N[v]), memoized on the
  // vertex-subset mask relative to the original graph.
  std::unordered_map<std::uint64_t, Polynomial> memo;
  auto rec = [&](auto&& self, std::uint64_t mask) -> const Polynomial& {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    Polynomial result;
    if (mask == 0) {
      result.coeffs = {1};
    } else {
      const int v = std::countr_zero(mask);
      const Polynomial& without = self(self, mask & ~(std::uint64_t{1} << v));
      const Polynomial& closed = self(self, mask & ~g.closed_neighborhood(v));
      result = shift_add(without, closed);
    }
    return memo.emplace(mask, std::move(result)).first->second;
  };
  return rec(rec, g.full_mask());
}

Fingerprint ksf_fingerprint(const Graph& g) {
  if (g.n > kMaxFingerprintVertices)
    throw capacity_error("fingerprint sweep bound exceeded");
  const std::uint64_t total = std::uint64_t{1} << g.n;
  std::vector<Polynomial> polys(total);
  polys[0].coeffs = {1};
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    const int v = std::countr_zero(mask);
    polys[mask] = shift_add(polys[mask & ~(std::uint64_t{1} << v)],
                            polys[mask & ~g.closed_neighborhood(v)]);
  }
  std::sort(polys.begin(), polys.end());
  return {std::move(polys)};
}

std::array<std::uint64_t, 2> fingerprint_digest(const Fingerprint& f) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(f.polys.size() * 16);
  auto put64 = [&bytes](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) bytes.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
  };
  for (const Polynomial& p : f.polys) {
    put64(p.coeffs.size());
    for (std::uint64_t c : p.coeffs) put64(c);
  }
  return murmur3_x64_128(bytes);
}

std::string fingerprint_digest_hex(const Fingerprint& f) {
  return digest_hex(fingerprint_digest(f));
}

std::uint64_t independence_unique_count(int n) {
  std::map<std::vector<std::uint64_t>, int> counts;
  for (const Graph& g : all_graphs(n)) ++counts[independence_polynomial(g).coeffs];
  std::uint64_t unique = 0;
  for (const auto& [poly, count] : counts)
    if (count == 1) ++unique;
  return unique;
}

std::vector<Graph> find_graphs_with_polynomial(int n, const Polynomial& p) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n))
    if (independence_polynomial(g) == p) out.push_back(g);
  return out;
}

std::uint64_t count_induced_copies(const Graph& g, const Graph& pattern) {
  const int k = pattern.n;
  if (k > g.n) return 0;
  if (k == 0) return 1;
  const Graph target = canonical_form(pattern).graph;
  std::uint64_t count = 0;
  // Gosper's hack over all k-subsets of the vertex set.
  std::uint64_t subset = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << g.n;
  while (subset < limit) {
    if (canonical_form(induced_subgraph(g, subset)).graph == target) ++count;
    const std::uint64_t c = subset & -subset;
    const std::uint64_t r = subset + c;
    subset = (((r ^ subset) >> 2) / c) | r;
  }
  return count;
}

std::uint64_t count_claws(const Graph& g) {
  std::uint64_t count = 0;
  for (int v = 0; v < g.n; ++v) {
    std::vector<int> nb;
    for (int u = 0; u < g.n; ++u)
      if (g.has_edge(v, u)) nb.push_back(u);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        if (g.has_edge(nb[a], nb[b])) continue;
        for (std::size_t c = b + 1; c < nb.size(); ++c)
          if (!g.has_edge(nb[a], nb[c]) && !g.has_edge(nb[b], nb[c])) ++count;
      }
  }
  return count;
}

}  // namespace kromatic
