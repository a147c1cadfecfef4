#include <doctest.h>

#include <numeric>

#include "cobord/error.hpp"
#include "cobord/generators.hpp"

using namespace cobord;

namespace {

GradedPoly P(int cap, int n) { return GradedPoly::variable(cap, n); }

struct Setup {
  explicit Setup(int cap) : chern(cap), fgl(universal_fgl(cap)), factory(fgl, chern) {}
  ChernCalculus chern;
  FormalGroupLaw fgl;
  GeneratorFactory factory;
};

const Setup& setup8() {
  static const Setup s(8);
  return s;
}

// Pascal row m+1 in 64-bit integers, then a plain gcd fold.
long brute_gcd(int m, int lo, int hi) {
  std::vector<long> row{1};
  for (int r = 1; r <= m + 1; ++r) {
    std::vector<long> next(row.size() + 1, 1);
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row = next;
  }
  long g = 0;
  for (int i = lo; i <= hi; ++i) g = std::gcd(g, row[i]);
  return g;
}

}  // namespace

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(31, 15) == 300540195);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("d(m) against brute force") {
  for (int m = 2; m <= 30; ++m) {
    CHECK(d_of(m) == brute_gcd(m, 1, m - 1));
    CHECK(d_of(m) == d_closed_form(m));
  }
  CHECK(d_of(4) == 5);
  CHECK(d_of(5) == 1);
  CHECK(d_of(6) == 7);
  CHECK(d_of(7) == 2);
}

TEST_CASE("d2(m) = d(m) d(m-1)") {
  CHECK(d2_of(5) == 5);
  CHECK(d2_of(3) == 6);
  for (int m = 4; m <= 30; ++m) CHECK(d2_of(m) == brute_gcd(m, 2, m - 2));
  for (int m = 3; m <= 30; ++m) CHECK(d2_of(m) == d_of(m) * d_of(m - 1));
}

TEST_CASE("euclid certificates") {
  for (int m = 2; m <= 20; ++m) {
    const EuclidCombo full = euclid_combo(m, 1, m - 1, EuclidCombo::Range::full);
    CHECK(full.certificate());
    CHECK(full.gcd_value == d_of(m));
    Integer sum = 0;
    for (const auto& [i, l] : full.lambdas) sum += l * binomial(m + 1, i);
    CHECK(sum == full.gcd_value);
  }
  EuclidCombo broken = euclid_combo(6, 1, 5, EuclidCombo::Range::full);
  broken.lambdas[1] += 1;
  CHECK_FALSE(broken.certificate());
}

TEST_CASE("prime powers") {
  CHECK(prime_power_base(9) == 3);
  CHECK(prime_power_base(8) == 2);
  CHECK(prime_power_base(7) == 7);
  CHECK_FALSE(prime_power_base(6).has_value());
  CHECK_FALSE(prime_power_base(1).has_value());
}

TEST_CASE("novikov criterion") {
  CHECK(novikov_check(2, 3).pass);
  CHECK(novikov_check(3, -6).pass);
  CHECK(novikov_check(4, 10).pass);
  CHECK(novikov_check(5, 5).pass);
  CHECK_FALSE(novikov_check(5, 3).pass);
  CHECK(novikov_check(14, 4).pass);
  CHECK_FALSE(novikov_check(14, 3).pass);
  CHECK_FALSE(novikov_check(4, 2).pass);
  const NovikovResult zero = novikov_check(4, 0);
  CHECK_FALSE(zero.pass);
  CHECK_FALSE(zero.reason.empty());
  CHECK_THROWS_AS(novikov_check(3, ratio(1, 2)), DomainError);
}

TEST_CASE("z generators") {
  const Setup& s = setup8();
  const GeneratorRecord z3 = s.factory.z_generator(3);
  CHECK((z3.cls == s.fgl.alpha(2, 2) || z3.cls == -s.fgl.alpha(2, 2)));
  CHECK(abs(z3.s_value) == 6);
  CHECK(abs(s.factory.z_generator(4).s_value) == 10);
  for (int k = 3; k <= 8; ++k) {
    const GeneratorRecord z = s.factory.z_generator(k);
    CHECK(abs(z.s_value) == Rational(d_of(k) * d_of(k - 1)));
    CHECK(z.cls.is_homogeneous(k));
    CHECK(record_consistent(s.chern, z));
  }
  CHECK_THROWS(s.factory.z_generator(9));
}

TEST_CASE("e generators") {
  const Setup& s = setup8();
  for (int m = 1; m <= 8; ++m) {
    const GeneratorRecord e = s.factory.e_generator(m);
    CHECK(abs(e.s_value) == Rational(d_of(m)));
    CHECK(e.combo.has_value());
    CHECK(record_consistent(s.chern, e));
  }
}

TEST_CASE("w generators") {
  const Setup& s = setup8();
  const GeneratorRecord x1 = s.factory.w_generator(1);
  CHECK(x1.cls == P(8, 1));
  const auto xs = s.factory.w_generators();
  REQUIRE(xs.size() == 7);
  for (const auto& x : xs) {
    CHECK(s.chern.is_w_class(x.cls));
    CHECK(x.certificates.w_member);
    if (x.degree >= 3) CHECK(abs(x.s_value) == Rational(d_of(x.degree) * d_of(x.degree - 1)));
    CHECK(record_consistent(s.chern, x));
  }
  // x3 is already in W, so no correction is needed.
  CHECK((xs[1].cls == s.fgl.alpha(2, 2) || xs[1].cls == -s.fgl.alpha(2, 2)));
  CHECK_THROWS(s.factory.w_generator(2));
}

TEST_CASE("low SU generators") {
  const Setup& s = setup8();
  const auto ys = s.factory.su_low_generators();
  REQUIRE(ys.size() == 3);
  CHECK(ys[0].cls == P(8, 2) - P(8, 1).pow(2) * ratio(9, 8));
  CHECK(ys[0].s_value == 3);
  CHECK(ys[1].cls == -s.fgl.alpha(2, 2));
  CHECK(abs(ys[1].s_value) == 6);
  CHECK(abs(ys[2].s_value) == 10);
  for (const auto& y : ys) {
    CHECK(s.chern.is_su_class(y.cls));
    CHECK(y.certificates.novikov.pass);
  }
}

TEST_CASE("y4 family") {
  const Setup& s = setup8();
  CHECK(GeneratorFactory::y4_literal_coefficient() == ratio(3, 2));
  CHECK_FALSE(s.chern.is_su_class(s.factory.y4_family(ratio(3, 2))));
  const Rational c = s.factory.y4_su_coefficient();
  CHECK(c == ratio(1, 2));
  CHECK(s.chern.is_su_class(s.factory.y4_family(c)));
  // The family is affine in c; c1c3 moves by 10 per unit of c.
  const Rational a = s.chern.chern_number(s.factory.y4_family(0), {3, 1});
  const Rational b = s.chern.chern_number(s.factory.y4_family(1), {3, 1});
  CHECK(a + c * (b - a) == 0);
}

TEST_CASE("quasi-toric analogs") {
  const Setup& s = setup8();
  for (int i = 5; i <= 8; ++i) {
    const GeneratorRecord y = s.factory.su_generator(i);
    const Integer want = d_of(i) * d_of(i - 1) * (i % 2 == 0 ? 2 : 1);
    CHECK(y.s_value == Rational(want));
    CHECK(s.chern.is_su_class(y.cls));
  }
  CHECK(s.factory.su_generator(5).s_value == 5);
  CHECK(s.factory.su_generator(6).s_value == 14);
  CHECK_THROWS(s.factory.su_generator(4));
}

TEST_CASE("i_tilde") {
  const Setup& s = setup8();
  const auto gens = s.factory.i_tilde(5);
  REQUIRE(gens.size() == 4);
  CHECK(gens[0] == P(8, 2) - P(8, 1).pow(2) * ratio(9, 8));
  CHECK(gens[1].is_homogeneous(3));
  CHECK(gens[3].is_homogeneous(5));
}
