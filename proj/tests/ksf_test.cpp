#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>

#include "kromatic/generate.hpp"
#include "kromatic/ksf.hpp"

using namespace kromatic;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Monomial-coefficient oracle: count assignments v -> nonempty subset of
// {1..len(nu)} with adjacent vertices disjoint and color i used exactly
// nu[i] times in total.
BigInt brute_monomial_coeff(const Graph& g, const std::vector<int>& nu) {
  const int colors = static_cast<int>(nu.size());
  std::vector<int> used(nu.size(), 0);
  std::vector<std::uint64_t> who(nu.size(), 0);  // vertices holding each color
  BigInt count = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (v == g.n) {
      for (std::size_t i = 0; i < nu.size(); ++i)
        if (used[i] != nu[i]) return;
      ++count;
      return;
    }
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << colors); ++subset) {
      bool ok = true;
      for (int c = 0; c < colors && ok; ++c)
        if (subset >> c & 1) {
          if (used[c] + 1 > nu[c] || (who[c] & g.neighbors(v))) ok = false;
        }
      if (!ok) continue;
      for (int c = 0; c < colors; ++c)
        if (subset >> c & 1) {
          ++used[c];
          who[c] |= std::uint64_t{1} << v;
        }
      self(self, v + 1);
      for (int c = 0; c < colors; ++c)
        if (subset >> c & 1) {
          --used[c];
          who[c] &= ~(std::uint64_t{1} << v);
        }
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("stable set masks") {
  const auto masks = stable_set_masks(path(3));
  // E: {0},{1},{2},{0,2}
  CHECK(masks == std::vector<std::uint64_t>{1, 2, 4, 5});
  CHECK(stable_set_masks(complete(3)).size() == 3);
  CHECK(stable_set_masks(Graph(0)).empty());
}

TEST_CASE("stable set covers of the 2-vertex empty graph") {
  const auto covers = stable_set_covers(WeightedGraph(Graph(2)), 5);
  CHECK(covers.size() == 5);
  std::map<std::vector<int>, int> shapes;
  for (const auto& c : covers)
    ++shapes[cover_partition(WeightedGraph(Graph(2)), c).parts];
  CHECK(shapes[{2}] == 1);          // {ab}
  CHECK(shapes[{1, 1}] == 1);       // {a},{b}
  CHECK(shapes[{2, 1}] == 2);       // {ab},{a} and {ab},{b}
  CHECK(shapes[{2, 1, 1}] == 1);    // all three
}

TEST_CASE("cover budget pruning") {
  CHECK(stable_set_covers(WeightedGraph(Graph(2)), 2).size() == 2);
  CHECK(stable_set_covers(WeightedGraph(Graph(2)), 1).empty());
  // the empty family covers the empty graph
  CHECK(stable_set_covers(WeightedGraph(Graph(0)), 3).size() == 1);
}

TEST_CASE("mbar expansion of the 2-vertex empty graph") {
  const SymSeries s = ksf_mbar_truncated(Graph(2), 5);
  CHECK(s.coeff(Partition({2})) == 1);
  CHECK(s.coeff(Partition({1, 1})) == 1);
  CHECK(s.coeff(Partition({2, 1})) == 2);
  CHECK(s.coeff(Partition({2, 1, 1})) == 1);
  CHECK(s.coeffs.size() == 4);
}

TEST_CASE("mbar of a weighted complete graph is a single basis element") {
  for (const std::vector<int>& lambda :
       {std::vector<int>{3}, {2, 1}, {1, 1, 1}, {4, 2}}) {
    const int ell = static_cast<int>(lambda.size());
    const WeightedGraph k(complete(ell), lambda);
    const SymSeries s = ksf_mbar_truncated(k, 8);
    CHECK(s.coeffs.size() == 1);
    CHECK(s.coeff(Partition(std::vector<int>(lambda))) == 1);
  }
}

TEST_CASE("csf in the augmented basis") {
  // K_2: only the all-singletons partition
  const SymSeries k2 = csf_mtilde(complete(2));
  CHECK(k2.coeff(Partition({1, 1})) == 1);
  CHECK(k2.coeffs.size() == 1);
  // E_2: both set partitions
  const SymSeries e2 = csf_mtilde(Graph(2));
  CHECK(e2.coeff(Partition({2})) == 1);
  CHECK(e2.coeff(Partition({1, 1})) == 1);
  // P_3: {02}{1}, singletons
  const SymSeries p3 = csf_mtilde(path(3));
  CHECK(p3.coeff(Partition({2, 1})) == 1);
  CHECK(p3.coeff(Partition({1, 1, 1})) == 1);
  CHECK(p3.coeffs.size() == 2);
  CHECK(csf_mtilde(Graph(0)).coeff(Partition{}) == 1);
}

TEST_CASE("monomial expansion against the coloring oracle") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() & 1) g.add_edge(i, j);
    const int d = n + 2;
    const SymSeries s = ksf_monomial_truncated(g, d);
    // every coefficient present, plus a few absent shapes, against brute force
    for (const auto& [key, value] : s.coeffs)
      CHECK(Rational(brute_monomial_coeff(g, key.parts)) == value);
    CHECK(s.coeff(Partition(std::vector<int>(static_cast<std::size_t>(n) + 4, 1))) == 0);
  }
  // spot value: K_2 truncated at 3 is 2m_11 + 6m_111
  const SymSeries k2 = ksf_monomial_truncated(complete(2), 3);
  CHECK(k2.coeff(Partition({1, 1})) == 2);
  CHECK(k2.coeff(Partition({1, 1, 1})) == 6);
  // adjacent sets are disjoint, so no color is ever used twice in K_2
  CHECK(k2.coeff(Partition({2, 1})) == 0);
  CHECK(k2.coeffs.size() == 2);
}

TEST_CASE("basis conversions round-trip") {
  std::mt19937 rng(37);
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const int d = n + 1;
      const SymSeries mbar = ksf_mbar_truncated(g, d);
      const SymSeries mono = convert(mbar, Basis::monomial);
      CHECK(series_equal(mono, ksf_monomial_truncated(g, d)));
      CHECK(series_equal(convert(mono, Basis::k_augmented), mbar));
      const SymSeries aug = convert(mbar, Basis::augmented);
      CHECK(series_equal(convert(aug, Basis::k_augmented), mbar));
      CHECK(series_equal(convert(aug, Basis::monomial), mono));
    }
  }
  CHECK_THROWS_AS(convert(SymSeries(Basis::monomial, 2), Basis::monomial), input_error);
}

TEST_CASE("geometric inverse of 1 + mbar_1") {
  const int d = 5;
  const SymSeries inv = odot_geometric_inverse_one_plus_m1(d);
  SymSeries one_plus(Basis::k_augmented, d);
  one_plus.add_term(Partition{}, 1);
  one_plus.add_term(Partition({1}), 1);
  const SymSeries prod = odot_product(one_plus, inv);
  // identity up to the bound: constant 1, everything else cancels except 1^{d+1}
  CHECK(prod.coeff(Partition{}) == 1);
  for (int k = 1; k <= d; ++k)
    CHECK(prod.coeff(Partition(std::vector<int>(static_cast<std::size_t>(k), 1))) == 0);
}

TEST_CASE("f excludes the vertex's singleton") {
  // E_2, vertex 0: covers without {0} alone: {01}; {01},{1}
  const SymSeries f = f_series(Graph(2), 0, 4);
  CHECK(f.coeff(Partition({2})) == 1);
  CHECK(f.coeff(Partition({2, 1})) == 1);
  CHECK(f.coeffs.size() == 2);
  CHECK_THROWS_AS(f_series(Graph(2), 2, 4), input_error);
}
