#pragma once

#include <functional>
#include <vector>

#include "kromatic/graph.hpp"
#include "kromatic/sym_series.hpp"

namespace kromatic {

/// A stable set cover of a host weighted graph: distinct nonempty stable
/// sets (as vertex masks) whose union is the whole vertex set.
struct StableSetCover {
  std::vector<std::uint64_t> sets;
};

/// All nonempty stable vertex sets, sorted by (size, mask).
std::vector<std::uint64_t> stable_set_masks(const Graph& g);

/// Chromatic symmetric function in the augmented monomial basis:
/// [mtilde_lambda] = number of set partitions of V into stable sets whose
/// weight sums sort to lambda. Degree bound = total weight (homogeneous).
SymSeries csf_mtilde(const WeightedGraph& g);
SymSeries csf_mtilde(const Graph& g);

/// Every stable set cover of total weight at most d, each exactly once
/// (include/exclude DFS over stable sets in (size, mask) order with
/// weight-budget and coverage pruning). `forbid_singleton` excludes the
/// singleton of that vertex from the candidate sets (the f(v,G) restriction).
void for_each_stable_set_cover(const WeightedGraph& g, int d,
                               const std::function<void(const StableSetCover&)>& fn,
                               int forbid_singleton = -1);

std::vector<StableSetCover> stable_set_covers(const WeightedGraph& g, int d);

/// Weight-sum partition of a cover.
Partition cover_partition(const WeightedGraph& g, const StableSetCover& c);

/// KSF in the K-augmented basis: [mbar_lambda] = number of stable set covers
/// with weight partition lambda, restricted to |lambda| <= d.
SymSeries ksf_mbar_truncated(const WeightedGraph& g, int d);
SymSeries ksf_mbar_truncated(const Graph& g, int d);

/// KSF in the monomial basis by direct enumeration of proper set colorings
/// with at most d total weighted color uses.
SymSeries ksf_monomial_truncated(const WeightedGraph& g, int d);
SymSeries ksf_monomial_truncated(const Graph& g, int d);

/// Exact change of basis at the shared degree bound.
SymSeries convert(const SymSeries& s, Basis target);

/// Sum_{k=0..d} (-1)^k mbar_{1^k}; the odot inverse of (1 + mbar_1).
SymSeries odot_geometric_inverse_one_plus_m1(int d);

/// f(v,G): sum of mbar terms over covers in which v is covered only by
/// stable sets of size greater than 1.
SymSeries f_series(const WeightedGraph& g, int v, int d);
SymSeries f_series(const Graph& g, int v, int d);

}  // namespace kromatic
