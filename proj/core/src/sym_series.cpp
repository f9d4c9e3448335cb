#include "kromatic/sym_series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace kromatic {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 1) throw input_error("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<int>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition partition_union(const Partition& a, const Partition& b) {
  std::vector<int> merged;
  merged.reserve(a.parts.size() + b.parts.size());
  std::merge(a.parts.begin(), a.parts.end(), b.parts.begin(), b.parts.end(),
             std::back_inserter(merged), std::greater<int>());
  Partition out;
  out.parts = std::move(merged);
  return out;
}

BigInt repetition_factorial(const Partition& p) {
  BigInt result = 1;
  std::size_t i = 0;
  while (i < p.parts.size()) {
    std::size_t j = i;
    while (j < p.parts.size() && p.parts[j] == p.parts[i]) ++j;
    for (std::size_t r = 2; r <= j - i; ++r) result *= static_cast<unsigned>(r);
    i = j;
  }
  return result;
}

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::monomial: return "m";
    case Basis::augmented: return "mtilde";
    case Basis::k_augmented: return "mbar";
  }
  return "?";
}

SymSeries SymSeries::constant(Basis b, int d, const Rational& value) {
  SymSeries s(b, d);
  s.add_term(Partition{}, value);
  return s;
}

void SymSeries::add_term(const Partition& key, const Rational& value) {
  if (key.size() > degree_bound) return;
  auto it = coeffs.find(key);
  if (it == coeffs.end()) {
    if (value != 0) coeffs.emplace(key, value);
    return;
  }
  it->second += value;
  if (it->second == 0) coeffs.erase(it);
}

Rational SymSeries::coeff(const Partition& key) const {
  auto it = coeffs.find(key);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool SymSeries::is_integral() const {
  for (const auto& [key, value] : coeffs)
    if (boost::multiprecision::denominator(value) != 1) return false;
  return true;
}

namespace {

void require_compatible(const SymSeries& a, const SymSeries& b) {
  if (a.basis != b.basis) throw input_error("series basis mismatch");
  if (a.degree_bound != b.degree_bound) throw input_error("series degree-bound mismatch");
}

}  // namespace

bool series_equal(const SymSeries& a, const SymSeries& b) {
  require_compatible(a, b);
  return a.coeffs == b.coeffs;
}

SymSeries operator+(const SymSeries& a, const SymSeries& b) {
  require_compatible(a, b);
  SymSeries out = a;
  for (const auto& [key, value] : b.coeffs) out.add_term(key, value);
  return out;
}

SymSeries operator-(const SymSeries& a, const SymSeries& b) {
  require_compatible(a, b);
  SymSeries out = a;
  for (const auto& [key, value] : b.coeffs) out.add_term(key, -value);
  return out;
}

SymSeries operator*(const Rational& c, const SymSeries& s) {
  SymSeries out(s.basis, s.degree_bound);
  if (c == 0) return out;
  for (const auto& [key, value] : s.coeffs) out.coeffs.emplace(key, c * value);
  return out;
}

SymSeries odot_product(const SymSeries& a, const SymSeries& b) {
  require_compatible(a, b);
  if (a.basis == Basis::monomial)
    throw input_error("odot product is defined on the augmented bases");
  SymSeries out(a.basis, a.degree_bound);
  for (const auto& [la, ca] : a.coeffs) {
    const int sa = la.size();
    for (const auto& [mu, cb] : b.coeffs) {
      if (sa + mu.size() > a.degree_bound) continue;
      out.add_term(partition_union(la, mu), ca * cb);
    }
  }
  return out;
}

namespace {

// Coefficient of m_nu in m_lambda * m_mu: the number of distinct exponent
// splittings a + b = nu (componentwise over the positions of nu) whose
// nonzero values sort to lambda and mu respectively.
BigInt monomial_structure_count(const Partition& lambda, const Partition& mu,
                                const Partition& nu) {
  std::map<int, int> remaining_a, remaining_b;
  for (int x : lambda.parts) ++remaining_a[x];
  for (int x : mu.parts) ++remaining_b[x];
  BigInt total = 0;
  auto rec = [&](auto&& self, std::size_t pos, int left_a, int left_b) -> void {
    if (pos == nu.parts.size()) {
      if (left_a == 0 && left_b == 0) ++total;
      return;
    }
    const int target = nu.parts[pos];
    // a-value 0: the whole part comes from mu.
    auto itb = remaining_b.find(target);
    if (itb != remaining_b.end() && itb->second > 0) {
      --itb->second;
      self(self, pos + 1, left_a, left_b - 1);
      ++itb->second;
    }
    for (auto& [av, count_a] : remaining_a) {
      if (count_a == 0 || av > target) continue;
      const int bv = target - av;
      if (bv == 0) {
        --count_a;
        self(self, pos + 1, left_a - 1, left_b);
        ++count_a;
      } else {
        auto it = remaining_b.find(bv);
        if (it == remaining_b.end() || it->second == 0) continue;
        --count_a;
        --it->second;
        self(self, pos + 1, left_a - 1, left_b - 1);
        ++count_a;
        ++it->second;
      }
    }
  };
  rec(rec, 0, lambda.length(), mu.length());
  return total;
}

// All partitions reachable by pairing some parts of lambda with distinct
// parts of mu (pairs add) and keeping the rest.
void candidate_merges(const Partition& lambda, const Partition& mu,
                      std::vector<Partition>& out) {
  std::vector<Partition> results;
  std::vector<int> mu_used(mu.parts.size(), 0);
  std::vector<int> acc;
  auto rec = [&](auto&& self, std::size_t li) -> void {
    if (li == lambda.parts.size()) {
      std::vector<int> parts = acc;
      for (std::size_t j = 0; j < mu.parts.size(); ++j)
        if (!mu_used[j]) parts.push_back(mu.parts[j]);
      results.push_back(Partition(std::move(parts)));
      return;
    }
    acc.push_back(lambda.parts[li]);
    self(self, li + 1);
    acc.pop_back();
    for (std::size_t j = 0; j < mu.parts.size(); ++j) {
      if (mu_used[j]) continue;
      mu_used[j] = 1;
      acc.push_back(lambda.parts[li] + mu.parts[j]);
      self(self, li + 1);
      acc.pop_back();
      mu_used[j] = 0;
    }
  };
  rec(rec, 0);
  std::sort(results.begin(), results.end());
  results.erase(std::unique(results.begin(), results.end()), results.end());
  out = std::move(results);
}

}  // namespace

SymSeries ordinary_product(const SymSeries& a, const SymSeries& b) {
  require_compatible(a, b);
  if (a.basis != Basis::monomial)
    throw input_error("ordinary product is defined on the monomial basis");
  SymSeries out(Basis::monomial, a.degree_bound);
  std::vector<Partition> candidates;
  for (const auto& [lambda, ca] : a.coeffs)
    for (const auto& [mu, cb] : b.coeffs) {
      if (lambda.size() + mu.size() > a.degree_bound) continue;
      candidate_merges(lambda, mu, candidates);
      for (const Partition& nu : candidates) {
        const BigInt count = monomial_structure_count(lambda, mu, nu);
        if (count != 0) out.add_term(nu, ca * cb * Rational(count));
      }
    }
  return out;
}

std::string render(const SymSeries& s) {
  std::vector<const std::pair<const Partition, Rational>*> terms;
  for (const auto& term : s.coeffs) terms.push_back(&term);
  std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
    const int sa = a->first.size(), sb = b->first.size();
    if (sa != sb) return sa < sb;
    return a->first.parts < b->first.parts;
  });
  if (terms.empty()) return "0";
  std::ostringstream out;
  const std::string name = basis_name(s.basis);
  bool first = true;
  for (const auto* term : terms) {
    if (!first) out << " + ";
    first = false;
    out << term->second << "*" << name << "[";
    for (std::size_t i = 0; i < term->first.parts.size(); ++i) {
      if (i) out << ",";
      out << term->first.parts[i];
    }
    out << "]";
  }
  return out.str();
}

}  // namespace kromatic
