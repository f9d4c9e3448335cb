#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "kromatic/graph.hpp"

namespace kromatic {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Integer partition: weakly decreasing positive parts; the empty partition
/// is legal and indexes the constant term of a series.
struct Partition {
  std::vector<int> parts;

  Partition() = default;
  explicit Partition(std::vector<int> p);

  int size() const;
  int length() const { return static_cast<int>(parts.size()); }

  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Multiset union of parts, re-sorted: 3211 U 42 = 432211.
Partition partition_union(const Partition& a, const Partition& b);

/// prod_i r_i(lambda)! where r_i is the number of parts equal to i.
BigInt repetition_factorial(const Partition& p);

enum class Basis {
  monomial,     // m_lambda
  augmented,    // mtilde_lambda = m_lambda * prod r_i!
  k_augmented,  // mbar_lambda = KSF of the weighted complete graph K_lambda
};

std::string basis_name(Basis b);

/// Truncated symmetric-function element: exact rational coefficients on
/// partitions of size at most degree_bound. Stored zeros are pruned and
/// arithmetic never produces keys above the bound.
struct SymSeries {
  Basis basis = Basis::k_augmented;
  int degree_bound = 0;
  std::map<Partition, Rational> coeffs;

  SymSeries() = default;
  SymSeries(Basis b, int d) : basis(b), degree_bound(d) {}

  static SymSeries constant(Basis b, int d, const Rational& value);

  void add_term(const Partition& key, const Rational& value);
  Rational coeff(const Partition& key) const;
  bool is_zero() const { return coeffs.empty(); }
  bool is_integral() const;
};

/// Equality of coefficient maps; mixing bases or degree bounds is an input
/// error, never an implicit re-truncation.
bool series_equal(const SymSeries& a, const SymSeries& b);

SymSeries operator+(const SymSeries& a, const SymSeries& b);
SymSeries operator-(const SymSeries& a, const SymSeries& b);
SymSeries operator*(const Rational& c, const SymSeries& s);

/// Tsujie's multiplication: basis rule mbar_lambda (.) mbar_mu =
/// mbar_{lambda U mu}, extended bilinearly; augmented or K-augmented basis.
SymSeries odot_product(const SymSeries& a, const SymSeries& b);

/// Ordinary product in the monomial basis: m_lambda * m_mu expanded by
/// merging parts over all alignments with multiplicity.
SymSeries ordinary_product(const SymSeries& a, const SymSeries& b);

/// Report rendering: terms sorted by (size, partition lex), exact rationals
/// as p/q, e.g. "2*mbar[2,1] + 1*mbar[2,1,1]".
std::string render(const SymSeries& s);

}  // namespace kromatic
