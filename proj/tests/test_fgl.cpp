#include <doctest.h>

#include "cobord/error.hpp"
#include "cobord/fgl.hpp"

using namespace cobord;

namespace {

GradedPoly P(int cap, int n) { return GradedPoly::variable(cap, n); }

}  // namespace

TEST_CASE("universal law low coefficients") {
  const FormalGroupLaw f = universal_fgl(4);
  CHECK(f.alpha(1, 0) == GradedPoly(4, 1));
  CHECK(f.alpha(1, 1) == -P(4, 1));
  CHECK(f.alpha(1, 2) == P(4, 1).pow(2) - P(4, 2));
  CHECK(f.alpha(2, 1) == f.alpha(1, 2));
  CHECK(f.alpha(2, 2).to_string() == "-5/2*P1^3+4*P1*P2-3/2*P3");
  CHECK_THROWS_AS(f.alpha(3, 3), RangeError);
  CHECK_THROWS_AS(f.alpha(-1, 2), RangeError);
}

TEST_CASE("logarithm linearizes the law") {
  for (int cap : {3, 6}) {
    const FormalGroupLaw f = universal_fgl(cap);
    const Series1 log = mishchenko_log(cap);
    const BiSeries lhs = compose_into<2>(log, f.series());
    const BiSeries rhs = lift_x(log) + lift_y(log);
    CHECK(lhs.agrees_through(rhs, cap + 1));
  }
}

TEST_CASE("formal inverse") {
  const FormalGroupLaw f = universal_fgl(5);
  const Series1 inv = f.formal_inverse();
  const Series1 x = Series1::coordinate(5, f.series().order(), 0);
  const Series1 zero = substitute<1>(f.series(), x, inv);
  CHECK(zero.is_zero());
  CHECK(coeff(inv, 1) == GradedPoly(5, -1));
  CHECK(additive_fgl(3).formal_inverse() == -Series1::coordinate(3, 4, 0));
}

TEST_CASE("invariant form and beta") {
  const FormalGroupLaw f = universal_fgl(6);
  CHECK(coeff(f.w(), 0) == GradedPoly(6, 1));
  for (int i = 1; i <= 6; ++i) CHECK(coeff(f.w(), i) == f.alpha(1, i));
  for (int k = 0; k + 2 <= f.w().order(); ++k)
    CHECK(coeff(f.beta(), k) == coeff(f.w(), k + 2) * ratio(k + 2, 2));
  const FormalGroupLaw a = additive_fgl(4);
  CHECK(a.w() == Series1::constant(GradedPoly(4, 1), 4));
  CHECK(a.beta().is_zero());
}

TEST_CASE("log recovered from w") {
  const FormalGroupLaw f = universal_fgl(5);
  const BiSeries g = f.series();
  const FormalGroupLaw bare(g, FglOrigin::custom);
  CHECK(bare.log_series().agrees_through(mishchenko_log(5), 5));
}

TEST_CASE("specialization to zero gives the additive law") {
  const int cap = 5;
  Substitution zero(cap);
  for (int n = 1; n <= cap; ++n) zero.assign(n, GradedPoly(cap));
  const FormalGroupLaw f = specialize_fgl(universal_fgl(cap), zero);
  CHECK(f.series() == additive_fgl(cap).series());
}

TEST_CASE("substitution is a ring map") {
  const int cap = 5;
  Substitution s(cap);
  s.assign(2, P(cap, 1).pow(2) * 3);
  s.assign(3, P(cap, 1) * P(cap, 2) - P(cap, 3));
  const GradedPoly a = P(cap, 1) * P(cap, 2) + P(cap, 3);
  const GradedPoly b = P(cap, 2) - P(cap, 1).pow(2);
  CHECK(s.apply(a * b) == s.apply(a) * s.apply(b));
  CHECK(s.apply(a + b) == s.apply(a) + s.apply(b));
  CHECK(s.is_assigned(2));
  CHECK_FALSE(s.is_assigned(4));
  CHECK(s.image(4) == P(cap, 4));
  CHECK_THROWS_AS(s.assign(2, P(cap, 1)), DomainError);
  CHECK_THROWS_AS(s.assign(9, P(cap, 1)), RangeError);

  Substitution t(cap);
  t.assign(1, GradedPoly(cap));
  CHECK(s.then(t).apply(a) == t.apply(s.apply(a)));
}

TEST_CASE("axiom failures are reported") {
  const int cap = 3;
  BiSeries f(cap, 4);
  f.set({1, 0}, GradedPoly(cap, 1));
  f.set({0, 1}, GradedPoly(cap, 1));
  f.set({2, 1}, P(cap, 2));
  CHECK(fgl_axiom_failure(f)->find("symmetry") != std::string::npos);
  CHECK_THROWS_AS(FormalGroupLaw(f, FglOrigin::custom), InvariantViolation);

  BiSeries g(cap, 4);
  g.set({1, 0}, GradedPoly(cap, 1));
  g.set({0, 1}, GradedPoly(cap, 1));
  g.set({1, 1}, P(cap, 2));
  CHECK(fgl_axiom_failure(g)->find("homogeneous") != std::string::npos);

  // x + y + P3 x^2 y^2 is symmetric and graded but not associative.
  BiSeries h(cap, 4);
  h.set({1, 0}, GradedPoly(cap, 1));
  h.set({0, 1}, GradedPoly(cap, 1));
  h.set({2, 2}, P(cap, 3));
  const auto failure = fgl_axiom_failure(h);
  REQUIRE(failure.has_value());
  CHECK(failure->find("associativity") != std::string::npos);
  CHECK_FALSE(fgl_axiom_failure(universal_fgl(cap).series()).has_value());
}
