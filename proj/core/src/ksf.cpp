#include "kromatic/ksf.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace kromatic {

namespace {

bool is_stable(const Graph& g, std::uint64_t mask) {
  for (std::uint64_t rest = mask; rest;) {
    const int v = std::countr_zero(rest);
    rest &= rest - 1;
    if (g.neighbors(v) & mask) return false;
  }
  return true;
}

int mask_weight(const WeightedGraph& g, std::uint64_t mask) {
  int w = 0;
  for (std::uint64_t rest = mask; rest;) {
    w += g.weights[std::countr_zero(rest)];
    rest &= rest - 1;
  }
  return w;
}

}  // namespace

std::vector<std::uint64_t> stable_set_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  const std::uint64_t total = g.n >= 1 ? std::uint64_t{1} << g.n : 1;
  for (std::uint64_t mask = 1; mask < total; ++mask)
    if (is_stable(g, mask)) out.push_back(mask);
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return a < b;
  });
  return out;
}

SymSeries csf_mtilde(const WeightedGraph& g) {
  SymSeries out(Basis::augmented, g.total_weight());
  std::vector<int> weights;  // weight sums of the parts chosen so far
  auto rec = [&](auto&& self, std::uint64_t uncovered) -> void {
    if (uncovered == 0) {
      out.add_term(Partition(weights), 1);
      return;
    }
    const int v = std::countr_zero(uncovered);
    const std::uint64_t vbit = std::uint64_t{1} << v;
    // Grow the stable part containing the lowest uncovered vertex.
    auto grow = [&](auto&& grow_self, std::uint64_t part, std::uint64_t allowed,
                    int weight) -> void {
      weights.push_back(weight);
      self(self, uncovered & ~part);
      weights.pop_back();
      for (std::uint64_t rest = allowed; rest;) {
        const int u = std::countr_zero(rest);
        rest &= rest - 1;
        const std::uint64_t ubit = std::uint64_t{1} << u;
        grow_self(grow_self, part | ubit,
                  rest & ~g.graph.neighbors(u), weight + g.weights[u]);
      }
    };
    grow(grow, vbit, (uncovered & ~vbit) & ~g.graph.neighbors(v) &
                         ~(vbit - 1) /* keep u > v */,
         g.weights[v]);
  };
  rec(rec, g.graph.full_mask());
  return out;
}

SymSeries csf_mtilde(const Graph& g) { return csf_mtilde(WeightedGraph(g)); }

void for_each_stable_set_cover(const WeightedGraph& g, int d,
                               const std::function<void(const StableSetCover&)>& fn,
                               int forbid_singleton) {
  std::vector<std::uint64_t> sets = stable_set_masks(g.graph);
  if (forbid_singleton >= 0) {
    const std::uint64_t bit = std::uint64_t{1} << forbid_singleton;
    std::erase(sets, bit);
  }
  const std::size_t k = sets.size();
  std::vector<int> set_weight(k);
  for (std::size_t i = 0; i < k; ++i) set_weight[i] = mask_weight(g, sets[i]);
  // suffix_cover[i] = union of sets[i..); prunes branches that can no longer
  // reach every vertex.
  std::vector<std::uint64_t> suffix_cover(k + 1, 0);
  for (std::size_t i = k; i-- > 0;) suffix_cover[i] = suffix_cover[i + 1] | sets[i];

  const std::uint64_t full = g.graph.full_mask();
  StableSetCover cover;
  auto uncovered_weight = [&](std::uint64_t covered) {
    return mask_weight(g, full & ~covered);
  };
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t covered, int used) -> void {
    if (used + uncovered_weight(covered) > d) return;
    if ((covered | suffix_cover[i]) != full) return;
    if (i == k) {
      if (covered == full) fn(cover);
      return;
    }
    // exclude sets[i]
    self(self, i + 1, covered, used);
    // include sets[i]
    if (used + set_weight[i] <= d) {
      cover.sets.push_back(sets[i]);
      self(self, i + 1, covered | sets[i], used + set_weight[i]);
      cover.sets.pop_back();
    }
  };
  rec(rec, 0, 0, 0);
}

std::vector<StableSetCover> stable_set_covers(const WeightedGraph& g, int d) {
  std::vector<StableSetCover> out;
  for_each_stable_set_cover(g, d, [&out](const StableSetCover& c) { out.push_back(c); });
  return out;
}

Partition cover_partition(const WeightedGraph& g, const StableSetCover& c) {
  std::vector<int> parts;
  parts.reserve(c.sets.size());
  for (std::uint64_t s : c.sets) parts.push_back(mask_weight(g, s));
  return Partition(std::move(parts));
}

SymSeries ksf_mbar_truncated(const WeightedGraph& g, int d) {
  SymSeries out(Basis::k_augmented, d);
  for_each_stable_set_cover(g, d, [&](const StableSetCover& c) {
    out.add_term(cover_partition(g, c), 1);
  });
  return out;
}

SymSeries ksf_mbar_truncated(const Graph& g, int d) {
  return ksf_mbar_truncated(WeightedGraph(g), d);
}

namespace {

// Number of ordered tuples of nonempty stable sets with the prescribed
// per-position weights and union V; [m_lambda] of the KSF counts exactly
// these (one color per tuple position).
BigInt count_weighted_tuples(const WeightedGraph& g,
                             const std::vector<std::uint64_t>& sets,
                             const std::vector<int>& set_weight,
                             const std::vector<int>& position_weights) {
  const std::uint64_t full = g.graph.full_mask();
  std::map<int, std::vector<std::uint64_t>> groups;
  for (std::size_t i = 0; i < sets.size(); ++i)
    groups[set_weight[i]].push_back(sets[i]);

  std::map<std::pair<std::size_t, std::uint64_t>, BigInt> memo;
  auto rec = [&](auto&& self, std::size_t pos, std::uint64_t covered) -> BigInt {
    if (pos == position_weights.size()) return covered == full ? 1 : 0;
    const auto key = std::make_pair(pos, covered);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    BigInt total = 0;
    auto grp = groups.find(position_weights[pos]);
    if (grp != groups.end())
      for (std::uint64_t s : grp->second) total += self(self, pos + 1, covered | s);
    memo.emplace(key, total);
    return total;
  };
  return rec(rec, 0, 0);
}

void partitions_up_to(int max_size, int max_part,
                      const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts;
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    fn(parts);
    for (int next = std::min(cap, remaining); next >= 1; --next) {
      parts.push_back(next);
      self(self, remaining - next, next);
      parts.pop_back();
    }
  };
  rec(rec, max_size, max_part);
}

}  // namespace

SymSeries ksf_monomial_truncated(const WeightedGraph& g, int d) {
  SymSeries out(Basis::monomial, d);
  if (g.graph.n == 0) {
    out.add_term(Partition{}, 1);
    return out;
  }
  const std::vector<std::uint64_t> sets = stable_set_masks(g.graph);
  std::vector<int> set_weight(sets.size());
  int max_weight = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    set_weight[i] = mask_weight(g, sets[i]);
    max_weight = std::max(max_weight, set_weight[i]);
  }
  const int min_cover_weight = g.total_weight();
  partitions_up_to(d, max_weight, [&](const std::vector<int>& parts) {
    if (parts.empty()) return;  // a nonempty graph admits no empty coloring
    int size = 0;
    for (int p : parts) size += p;
    if (size < min_cover_weight) return;
    const BigInt count = count_weighted_tuples(g, sets, set_weight, parts);
    if (count != 0) out.add_term(Partition(std::vector<int>(parts)), Rational(count));
  });
  return out;
}

SymSeries ksf_monomial_truncated(const Graph& g, int d) {
  return ksf_monomial_truncated(WeightedGraph(g), d);
}

namespace {

// Monomial-basis expansion of mbar_lambda = KSF of the weighted complete
// graph K_lambda, truncated at d.
SymSeries mbar_in_monomial(const Partition& lambda, int d) {
  Graph complete(lambda.length());
  for (int i = 0; i < complete.n; ++i)
    for (int j = i + 1; j < complete.n; ++j) complete.add_edge(i, j);
  return ksf_monomial_truncated(WeightedGraph(std::move(complete), lambda.parts), d);
}

SymSeries to_monomial(const SymSeries& s) {
  SymSeries out(Basis::monomial, s.degree_bound);
  switch (s.basis) {
    case Basis::monomial:
      return s;
    case Basis::augmented:
      for (const auto& [key, value] : s.coeffs)
        out.add_term(key, value * Rational(repetition_factorial(key)));
      return out;
    case Basis::k_augmented:
      for (const auto& [key, value] : s.coeffs) {
        const SymSeries expanded = mbar_in_monomial(key, s.degree_bound);
        for (const auto& [mkey, mvalue] : expanded.coeffs)
          out.add_term(mkey, value * mvalue);
      }
      return out;
  }
  throw input_error("unknown basis");
}

// Triangular back-substitution: mbar_lambda agrees with mtilde_lambda in its
// lowest degree and has only strictly larger keys above, so peeling keys in
// ascending size terminates. Residual keys above the bound would mean the
// bound cannot represent the element; report that instead of truncating.
SymSeries monomial_to_k_augmented(const SymSeries& s) {
  SymSeries out(Basis::k_augmented, s.degree_bound);
  std::map<Partition, Rational> residual = s.coeffs;
  while (!residual.empty()) {
    auto smallest = residual.begin();
    for (auto it = residual.begin(); it != residual.end(); ++it)
      if (it->first.size() < smallest->first.size()) smallest = it;
    const Partition key = smallest->first;
    if (key.size() > s.degree_bound)
      throw input_error("degree bound too small for triangular inversion");
    const Rational b = smallest->second / Rational(repetition_factorial(key));
    out.add_term(key, b);
    const SymSeries expanded = mbar_in_monomial(key, s.degree_bound);
    for (const auto& [mkey, mvalue] : expanded.coeffs) {
      auto it = residual.find(mkey);
      const Rational next = (it == residual.end() ? Rational(0) : it->second) - b * mvalue;
      if (next == 0) {
        if (it != residual.end()) residual.erase(it);
      } else if (it == residual.end()) {
        residual.emplace(mkey, next);
      } else {
        it->second = next;
      }
    }
  }
  return out;
}

}  // namespace

SymSeries convert(const SymSeries& s, Basis target) {
  if (target == s.basis) throw input_error("conversion target equals source basis");
  const SymSeries mono = to_monomial(s);
  switch (target) {
    case Basis::monomial:
      return mono;
    case Basis::augmented: {
      SymSeries out(Basis::augmented, s.degree_bound);
      for (const auto& [key, value] : mono.coeffs)
        out.add_term(key, value / Rational(repetition_factorial(key)));
      return out;
    }
    case Basis::k_augmented:
      return monomial_to_k_augmented(mono);
  }
  throw input_error("unknown basis");
}

SymSeries odot_geometric_inverse_one_plus_m1(int d) {
  if (d < 0) throw input_error("degree bound must be nonnegative");
  SymSeries out(Basis::k_augmented, d);
  for (int k = 0; k <= d; ++k)
    out.add_term(Partition(std::vector<int>(static_cast<std::size_t>(k), 1)),
                 k % 2 == 0 ? 1 : -1);
  return out;
}

SymSeries f_series(const WeightedGraph& g, int v, int d) {
  if (v < 0 || v >= g.graph.n) throw input_error("vertex out of range");
  SymSeries out(Basis::k_augmented, d);
  for_each_stable_set_cover(
      g, d, [&](const StableSetCover& c) { out.add_term(cover_partition(g, c), 1); },
      /*forbid_singleton=*/v);
  return out;
}

SymSeries f_series(const Graph& g, int v, int d) {
  return f_series(WeightedGraph(g), v, d);
}

}  // namespace kromatic
