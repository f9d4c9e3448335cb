#include <doctest.h>

#include "kromatic/sym_series.hpp"

using namespace kromatic;

namespace {

SymSeries singleton(Basis b, int d, std::vector<int> parts, const Rational& c) {
  SymSeries s(b, d);
  s.add_term(Partition(std::move(parts)), c);
  return s;
}

}  // namespace

TEST_CASE("partition basics") {
  const Partition p({1, 3, 2, 3});
  CHECK(p.parts == std::vector<int>{3, 3, 2, 1});
  CHECK(p.size() == 9);
  CHECK(p.length() == 4);
  CHECK_THROWS_AS(Partition({0}), input_error);
  CHECK_THROWS_AS(Partition({2, -1}), input_error);

  CHECK(partition_union(Partition({3, 1}), Partition({2, 1})).parts ==
        std::vector<int>{3, 2, 1, 1});
  CHECK(repetition_factorial(Partition({3, 2, 2, 1, 1, 1})) == 12);  // 2! * 3!
  CHECK(repetition_factorial(Partition{}) == 1);
}

TEST_CASE("series term bookkeeping") {
  SymSeries s(Basis::monomial, 3);
  s.add_term(Partition({2, 1}), 2);
  s.add_term(Partition({2, 1}), -2);  // cancels away
  s.add_term(Partition({3, 1}), 5);   // beyond the bound, dropped
  s.add_term(Partition({1}), Rational(1, 2));
  CHECK(s.coeff(Partition({2, 1})) == 0);
  CHECK(s.coeff(Partition({3, 1})) == 0);
  CHECK(s.coeff(Partition({1})) == Rational(1, 2));
  CHECK(!s.is_integral());
  CHECK(s.coeffs.size() == 1);
  CHECK(SymSeries(Basis::monomial, 3).is_zero());
  CHECK(SymSeries::constant(Basis::monomial, 3, 7).coeff(Partition{}) == 7);
}

TEST_CASE("series equality refuses mixed frames") {
  const SymSeries a(Basis::monomial, 3);
  CHECK_THROWS_AS(series_equal(a, SymSeries(Basis::augmented, 3)), input_error);
  CHECK_THROWS_AS(series_equal(a, SymSeries(Basis::monomial, 4)), input_error);
  CHECK(series_equal(a, SymSeries(Basis::monomial, 3)));
}

TEST_CASE("odot multiplies by multiset union") {
  const int d = 6;
  SymSeries a(Basis::k_augmented, d);
  a.add_term(Partition({2, 1}), 2);
  a.add_term(Partition({1}), 1);
  SymSeries b(Basis::k_augmented, d);
  b.add_term(Partition({2}), 3);
  b.add_term(Partition{}, 1);
  const SymSeries p = odot_product(a, b);
  CHECK(p.coeff(Partition({2, 2, 1})) == 6);
  CHECK(p.coeff(Partition({2, 1})) == 5);  // 2*1 (a-term * const) + 1*3
  CHECK(p.coeff(Partition({1})) == 1);
  CHECK_THROWS_AS(odot_product(a, SymSeries(Basis::monomial, d)), input_error);
}

TEST_CASE("odot truncation drops oversize unions") {
  SymSeries a(Basis::augmented, 3);
  a.add_term(Partition({2}), 1);
  const SymSeries p = odot_product(a, a);
  CHECK(p.coeff(Partition({2, 2})) == 0);
  CHECK(p.is_zero());
}

TEST_CASE("ordinary product reference expansions") {
  const int d = 6;
  const SymSeries m1 = singleton(Basis::monomial, d, {1}, 1);
  const SymSeries m2 = singleton(Basis::monomial, d, {2}, 1);
  const SymSeries m11 = singleton(Basis::monomial, d, {1, 1}, 1);

  const SymSeries sq = ordinary_product(m1, m1);
  CHECK(sq.coeff(Partition({2})) == 1);
  CHECK(sq.coeff(Partition({1, 1})) == 2);
  CHECK(sq.coeffs.size() == 2);

  const SymSeries p12 = ordinary_product(m1, m2);
  CHECK(p12.coeff(Partition({3})) == 1);
  CHECK(p12.coeff(Partition({2, 1})) == 1);
  CHECK(p12.coeffs.size() == 2);

  const SymSeries p111 = ordinary_product(m1, m11);
  CHECK(p111.coeff(Partition({2, 1})) == 1);
  CHECK(p111.coeff(Partition({1, 1, 1})) == 3);
  CHECK(p111.coeffs.size() == 2);

  const SymSeries p2_11 = ordinary_product(m2, m11);
  CHECK(p2_11.coeff(Partition({3, 1})) == 1);
  CHECK(p2_11.coeff(Partition({2, 1, 1})) == 1);
  CHECK(p2_11.coeff(Partition({2, 2})) == 0);  // x_i^2 x_j x_k never has shape 22

  const SymSeries msq11 = ordinary_product(m11, m11);
  CHECK(msq11.coeff(Partition({2, 2})) == 1);
  CHECK(msq11.coeff(Partition({2, 1, 1})) == 2);
  CHECK(msq11.coeff(Partition({1, 1, 1, 1})) == 6);
  CHECK_THROWS_AS(ordinary_product(m1, singleton(Basis::augmented, d, {1}, 1)),
                  input_error);
}

TEST_CASE("ordinary product is commutative and distributes") {
  const int d = 5;
  SymSeries a(Basis::monomial, d);
  a.add_term(Partition({2, 1}), 2);
  a.add_term(Partition({1}), -1);
  SymSeries b(Basis::monomial, d);
  b.add_term(Partition({1, 1}), 3);
  b.add_term(Partition({2}), 1);
  CHECK(series_equal(ordinary_product(a, b), ordinary_product(b, a)));
  const SymSeries lhs = ordinary_product(a, a + b);
  const SymSeries rhs = ordinary_product(a, a) + ordinary_product(a, b);
  CHECK(series_equal(lhs, rhs));
}

TEST_CASE("rendering") {
  SymSeries s(Basis::k_augmented, 4);
  s.add_term(Partition({2, 1}), 2);
  s.add_term(Partition({1}), Rational(-1, 2));
  s.add_term(Partition{}, 1);
  const std::string text = render(s);
  CHECK(text.find("mbar[2,1]") != std::string::npos);
  CHECK(text.find("-1/2") != std::string::npos);
  CHECK(render(SymSeries(Basis::monomial, 2)) == "0");
}
