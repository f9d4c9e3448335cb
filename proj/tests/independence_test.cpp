#include <doctest.h>

#include <bit>
#include <map>
#include <random>

#include "kromatic/generate.hpp"
#include "kromatic/independence.hpp"

using namespace kromatic;

namespace {

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// subset-enumeration oracle, independent of the production recursion
Polynomial brute_poly(const Graph& g) {
  std::vector<std::uint64_t> coeffs(1, 0);
  for (std::uint64_t mask = 0; mask <= g.full_mask(); ++mask) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if (mask >> v & 1 && (g.neighbors(v) & mask)) ok = false;
    if (!ok) continue;
    const std::size_t k = static_cast<std::size_t>(std::popcount(mask));
    if (coeffs.size() <= k) coeffs.resize(k + 1, 0);
    ++coeffs[k];
    if (g.n == 0) break;
  }
  return Polynomial{coeffs};
}

}  // namespace

TEST_CASE("independence polynomials of named graphs") {
  CHECK(independence_polynomial(complete(4)) == Polynomial{{1, 4}});
  CHECK(independence_polynomial(Graph(3)) == Polynomial{{1, 3, 3, 1}});
  CHECK(independence_polynomial(cycle(5)) == Polynomial{{1, 5, 5}});
  CHECK(independence_polynomial(star(3)) == Polynomial{{1, 4, 3, 1}});
  CHECK(independence_polynomial(Graph(0)) == Polynomial{{1}});
}

TEST_CASE("independence polynomial matches subset oracle") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng() % 7);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1) g.add_edge(i, j);
    CHECK(independence_polynomial(g) == brute_poly(g));
  }
}

TEST_CASE("fingerprint covers every induced subgraph") {
  const Graph g = cycle(4);
  const Fingerprint f = ksf_fingerprint(g);
  REQUIRE(f.polys.size() == 16);
  // sorted multiset; brute-force the same multiset independently
  std::vector<Polynomial> expected;
  for (std::uint64_t mask = 0; mask < 16; ++mask)
    expected.push_back(brute_poly(induced_subgraph(g, mask)));
  std::sort(expected.begin(), expected.end());
  CHECK(f.polys == expected);
}

TEST_CASE("fingerprint separates non-equivalent graphs and not isomorphs") {
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  Graph p3b(3);
  p3b.add_edge(1, 2);
  p3b.add_edge(0, 2);
  CHECK(ksf_fingerprint(p3) == ksf_fingerprint(p3b));
  CHECK(!(ksf_fingerprint(p3) == ksf_fingerprint(complete(3))));
  CHECK(fingerprint_digest_hex(ksf_fingerprint(p3)) ==
        fingerprint_digest_hex(ksf_fingerprint(p3b)));
  CHECK(fingerprint_digest_hex(ksf_fingerprint(p3)).size() == 32);
}

TEST_CASE("independence-unique counts at desk scale") {
  CHECK(independence_unique_count(1) == 1);
  CHECK(independence_unique_count(2) == 2);
  CHECK(independence_unique_count(3) == 4);
  CHECK(independence_unique_count(4) == 7);
  CHECK(independence_unique_count(5) == 13);
  CHECK(independence_unique_count(6) == 24);
}

TEST_CASE("polynomial census finds the shared-polynomial pair") {
  const auto found = find_graphs_with_polynomial(7, Polynomial{{1, 7, 15, 16, 9, 2}});
  CHECK(found.size() == 2);
  for (const Graph& g : found)
    CHECK(independence_polynomial(g) == Polynomial{{1, 7, 15, 16, 9, 2}});
}

TEST_CASE("induced copy counting") {
  Graph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  CHECK(count_induced_copies(cycle(4), p3) == 4);
  CHECK(count_induced_copies(cycle(4), complete(3)) == 0);
  CHECK(count_induced_copies(complete(5), complete(3)) == 10);
  CHECK(count_induced_copies(p3, Graph(0)) == 1);
  CHECK(count_induced_copies(p3, complete(4)) == 0);  // pattern larger than host
}

TEST_CASE("claw counting") {
  CHECK(count_claws(star(3)) == 1);
  CHECK(count_claws(star(4)) == 4);   // choose 3 of 4 leaves
  CHECK(count_claws(cycle(6)) == 0);
  CHECK(count_claws(complete(5)) == 0);
  // oracle: claws are induced K_{1,3} copies
  std::mt19937 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 4);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1) g.add_edge(i, j);
    CHECK(count_claws(g) == count_induced_copies(g, star(3)));
  }
}
