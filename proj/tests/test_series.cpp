#include <doctest.h>

#include <random>

#include "cobord/error.hpp"
#include "cobord/graded_poly.hpp"
#include "cobord/linalg.hpp"
#include "cobord/partitions.hpp"
#include "cobord/series.hpp"

using namespace cobord;

namespace {

GradedPoly P(int cap, int n) { return GradedPoly::variable(cap, n); }
GradedPoly K(int cap, const Rational& q) { return GradedPoly(cap, q); }

GradedPoly random_poly(std::mt19937& gen, int cap) {
  GradedPoly p(cap);
  for (int n = 0; n <= cap; ++n)
    for (const auto& m : monomial_basis(n))
      if (gen() % 3 == 0) p.add_term(m, ratio(static_cast<int>(gen() % 7) - 3, 1 + gen() % 3));
  return p;
}

}  // namespace

TEST_CASE("rationals stay canonical") {
  CHECK(ratio(2, 2) == 1);
  CHECK(to_fraction_string(ratio(2, 2)) == "1/1");
  CHECK(to_fraction_string(ratio(6, -4)) == "-3/2");
  CHECK(to_string(ratio(-9, 8)) == "-9/8");
  CHECK(parse_rational("-10/4") == ratio(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/x"), ParseError);
  CHECK(odd_part(Integer(-12)) == 3);
}

TEST_CASE("graded polynomial arithmetic") {
  const int cap = 4;
  CHECK(P(cap, 1) * P(cap, 1) == P(cap, 1).pow(2));
  CHECK((P(cap, 1) * P(cap, 1)).homogeneous_weight() == 2);
  const GradedPoly y2 = P(cap, 2) - P(cap, 1).pow(2) * ratio(9, 8);
  CHECK(y2 + P(cap, 1).pow(2) * ratio(9, 8) == P(cap, 2));
  CHECK(((P(2, 1).pow(2) - P(2, 2)) * P(2, 1)).is_zero());
  CHECK_THROWS_AS(P(2, 1) + P(3, 1), ConfigError);
  const GradedPoly a22 = P(cap, 1).pow(3) * ratio(-5, 2) + P(cap, 1) * P(cap, 2) * 4 - P(cap, 3) * ratio(3, 2);
  CHECK(a22.to_string() == "-5/2*P1^3+4*P1*P2-3/2*P3");
  CHECK(GradedPoly(cap).to_string() == "0");
  CHECK(GradedPoly(cap).is_homogeneous(3));
  CHECK_FALSE((P(cap, 1) + P(cap, 2)).homogeneous_weight().has_value());
}

TEST_CASE("ring axioms on sampled triples") {
  std::mt19937 gen(1);
  const int cap = 6;
  for (int t = 0; t < 20; ++t) {
    const GradedPoly a = random_poly(gen, cap), b = random_poly(gen, cap), c = random_poly(gen, cap);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == GradedPoly(cap));
  }
}

TEST_CASE("monomial basis has p(n) elements in canonical order") {
  for (int n = 0; n <= 10; ++n) CHECK(static_cast<std::int64_t>(monomial_basis(n).size()) == partition_count(n));
  const auto b = monomial_basis(3);
  CHECK(GradedPoly::monomial(3, b[0]).to_string() == "P1^3");
  CHECK(GradedPoly::monomial(3, b[1]).to_string() == "P1*P2");
  CHECK(GradedPoly::monomial(3, b[2]).to_string() == "P3");
}

TEST_CASE("partitions") {
  const std::int64_t p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) CHECK(partition_count(n) == p[n]);
  CHECK(partitions(3) == std::vector<Partition>{{1, 1, 1}, {2, 1}, {3}});
  CHECK(partition_key({2, 1, 1}) == "1,1,2");
  CHECK(parse_partition("1,2,1") == Partition{2, 1, 1});
  CHECK_THROWS_AS(parse_partition("1,0"), DomainError);
  // Partitions of n into parts 1, 2: floor(n/2) + 1.
  for (int n = 0; n <= 12; ++n) CHECK(restricted_partition_count(n, {1, 2}) == n / 2 + 1);
}

TEST_CASE("series composition") {
  const int cap = 4;
  const Series1 s = make_series(cap, 5, {K(cap, 0), K(cap, 1), K(cap, 1)});
  const Series1 c = series_compose(s, s);
  const Series1 want = make_series(cap, 5, {K(cap, 0), K(cap, 1), K(cap, 2), K(cap, 2), K(cap, 1)});
  CHECK(c == want);
  const Series1 x = Series1::coordinate(cap, 5, 0);
  CHECK(series_compose(x, s) == s);
  CHECK_THROWS_AS(series_compose(s, make_series(cap, 5, {K(cap, 1), K(cap, 1)})), DomainError);
}

TEST_CASE("reversion matches Lagrange inversion") {
  // s = x + a x^2 has inverse Σ (-1)^n Catalan(n) a^n x^{n+1}.
  const int cap = 6;
  const GradedPoly a = P(cap, 1) * ratio(1, 2);
  const Series1 s = make_series(cap, 7, {K(cap, 0), K(cap, 1), a});
  const Series1 g = series_reversion(s);
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int n = 0; n <= 6; ++n) {
    const GradedPoly want = a.pow(n) * Rational(n % 2 ? -catalan[n] : catalan[n]);
    CHECK(coeff(g, n + 1) == want);
  }
  CHECK(coeff(g, 2).to_string() == "-1/2*P1");
  CHECK(coeff(g, 3).to_string() == "1/2*P1^2");
  CHECK(series_reversion(g) == s);
  CHECK(series_compose(g, s) == Series1::coordinate(cap, 7, 0));
  CHECK_THROWS_AS(series_reversion(make_series(cap, 3, {K(cap, 0), K(cap, 2)})), DomainError);
}

TEST_CASE("exp, log-type helpers") {
  const int cap = 3;
  // exp(x) = Σ x^n / n!
  const Series1 e = series_exp(Series1::coordinate(cap, 6, 0));
  Rational f = 1;
  for (int n = 0; n <= 6; ++n) {
    if (n > 0) f /= n;
    CHECK(coeff(e, n) == K(cap, f));
  }
  const Series1 one_minus_x = make_series(cap, 6, {K(cap, 1), K(cap, -1)});
  const Series1 r = reciprocal(one_minus_x);
  for (int n = 0; n <= 6; ++n) CHECK(coeff(r, n) == K(cap, 1));
  CHECK(derivative(integral(r)) == r);
}

TEST_CASE("bivariate division") {
  const int cap = 3;
  BiSeries num(cap, 6), den(cap, 6);
  num.set({2, 0}, K(cap, 1));
  num.set({0, 2}, K(cap, -1));
  den.set({1, 0}, K(cap, 1));
  den.set({0, 1}, K(cap, -1));
  const BiSeries q = biseries_divide(num, den);
  BiSeries want(cap, 6);
  want.set({1, 0}, K(cap, 1));
  want.set({0, 1}, K(cap, 1));
  CHECK(q.agrees_through(want, 3));

  BiSeries bad(cap, 6);
  bad.set({2, 0}, K(cap, 1));
  bad.set({1, 1}, K(cap, 1));
  bad.set({0, 2}, K(cap, 1));
  try {
    biseries_divide(bad, den);
    FAIL("expected NotDivisibleError");
  } catch (const NotDivisibleError& e) {
    CHECK(e.degree() == 2);
  }
}

TEST_CASE("exact linear algebra") {
  const Matrix a = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, ratio(1, 2)}}, 3);
  CHECK(rank(a) == 2);
  const auto x = solve(a, {6, 12, ratio(3, 2)});
  REQUIRE(x.has_value());
  CHECK(a * *x == Vector{6, 12, ratio(3, 2)});
  CHECK_FALSE(solve(a, {1, 0, 0}).has_value());
  const auto ns = nullspace(a);
  REQUIRE(ns.size() == 1);
  CHECK(a * ns[0] == Vector{0, 0, 0});
  const Matrix h = Matrix::from_rows({{1, ratio(1, 2)}, {ratio(1, 2), ratio(1, 3)}}, 2);
  const auto inv = inverse(h);
  REQUIRE(inv.has_value());
  CHECK(*inv == Matrix::from_rows({{4, -6}, {-6, 12}}, 2));
  CHECK_FALSE(inverse(a).has_value());
}
