#include <doctest.h>

#include "cobord/error.hpp"
#include "cobord/generators.hpp"
#include "cobord/ideal.hpp"
#include "cobord/partitions.hpp"
#include "cobord/specializations.hpp"

using namespace cobord;

namespace {

GradedPoly P(int cap, int n) { return GradedPoly::variable(cap, n); }

}  // namespace

TEST_CASE("ideal validation") {
  CHECK_THROWS_AS(IdealSpec("bad", {GradedPoly(4)}, 4), DomainError);
  CHECK_THROWS_AS(IdealSpec("bad", {P(4, 1) + P(4, 2)}, 4), DomainError);
  CHECK_THROWS_AS(IdealSpec("bad", {P(6, 6)}, 4), DomainError);
}

TEST_CASE("degree pieces") {
  const int cap = 6;
  const IdealSpec p1("(P1)", {P(cap, 1)}, cap);
  const DegreePiece d2 = ideal_degree_basis(p1, 2);
  CHECK(d2.ideal_dim == 1);
  CHECK(d2.ambient_dim == 2);
  CHECK(d2.quotient_dim() == 1);
  const IdealSpec y2("(y2)", {P(cap, 2) - P(cap, 1).pow(2) * ratio(9, 8)}, cap);
  CHECK(ideal_degree_basis(y2, 2).ideal_dim == 1);
  CHECK(ideal_degree_basis(y2, 1).ideal_dim == 0);
  // Modulo P1 the monomials without a factor P1 survive: p(n) - p(n-1).
  for (int n = 1; n <= cap; ++n) {
    const DegreePiece d = ideal_degree_basis(p1, n);
    CHECK(static_cast<std::int64_t>(d.ideal_dim + d.quotient_dim()) == partition_count(n));
    CHECK(static_cast<std::int64_t>(d.quotient_dim()) == partition_count(n) - partition_count(n - 1));
  }
}

TEST_CASE("membership") {
  const int cap = 5;
  const IdealSpec i("(P1, P2)", {P(cap, 1), P(cap, 2)}, cap);
  CHECK(ideal_member(i, P(cap, 1) * P(cap, 3)));
  CHECK(ideal_member(i, P(cap, 2).pow(2) + P(cap, 1) * P(cap, 3)));
  CHECK_FALSE(ideal_member(i, P(cap, 3)));
  CHECK_FALSE(ideal_member(i, P(cap, 4) + P(cap, 1) * P(cap, 3)));
  CHECK(ideal_member(i, GradedPoly(cap)));
  const GradedPoly z = P(cap, 1) * P(cap, 3) * 2 - P(cap, 2).pow(2);
  const auto coords = ideal_coordinates(i, z, 4);
  REQUIRE(coords.has_value());
  const DegreePiece d = ideal_degree_basis(i, 4);
  Vector combo(d.spanning.cols());
  for (std::size_t r = 0; r < d.spanning.rows(); ++r)
    for (std::size_t c = 0; c < d.spanning.cols(); ++c) combo[c] += (*coords)[r] * d.spanning(r, c);
  const auto basis = monomial_basis(4);
  CHECK(from_coordinates(cap, basis, combo) == z);
  CHECK_FALSE(ideal_coordinates(i, P(cap, 4), 4).has_value());
}

TEST_CASE("abel ideal") {
  const int cap = 6;
  const FormalGroupLaw f = universal_fgl(cap);
  const IdealSpec ab = abel_ideal(f);
  CHECK(ideal_degree_basis(ab, 3).ideal_dim == 1);
  CHECK(ideal_member(ab, f.alpha(2, 2)));
  CHECK_FALSE(ideal_member(ab, P(cap, 1)));
  const GradedReport r = graded_report(ab);
  for (const auto& row : r.rows) CHECK(row.quotient_dim == static_cast<std::size_t>(row.degree / 2 + 1));
}

TEST_CASE("graded report with expectations") {
  const int cap = 4;
  const IdealSpec i("(P1)", {P(cap, 1)}, cap);
  CHECK(graded_report(i, std::vector<std::int64_t>{1, 0, 1, 1, 2}).pass());
  const GradedReport bad = graded_report(i, std::vector<std::int64_t>{1, 0, 2, 1, 2});
  CHECK_FALSE(bad.pass());
  CHECK(bad.first_failure() == 2);
}

TEST_CASE("ideal comparison") {
  const int cap = 4;
  const IdealSpec a("(P1)", {P(cap, 1)}, cap);
  const IdealSpec b("(P1^2)", {P(cap, 1).pow(2)}, cap);
  const IdealSpec c("(2P1)", {P(cap, 1) * 2}, cap);
  const IdealComparison ab = ideals_equal(a, b, cap);
  CHECK_FALSE(ab.equal);
  CHECK(ab.first_failing_degree == 1);
  CHECK_FALSE(ideals_equal(b, a, cap).equal);
  CHECK(ideals_equal(a, a, cap).equal);
  CHECK(ideals_equal(a, c, cap).equal);
  CHECK(ideals_equal(c, a, cap).equal);
}

TEST_CASE("hilbert predictions") {
  const auto h1 = hilbert_prediction({1}, 8);
  for (int n = 0; n <= 8; ++n) CHECK(h1[n] == partition_count(n) - partition_count(n - 1));
  CHECK(hilbert_prediction({}, 6) == std::vector<std::int64_t>{1, 1, 2, 3, 5, 7, 11});
  CHECK(free_ring_dimensions({1, 2}, 6) == std::vector<std::int64_t>{1, 1, 2, 2, 3, 3, 4});
  CHECK(free_ring_dimensions({1, 2, 3, 4}, 5) == std::vector<std::int64_t>{1, 1, 2, 3, 5, 6});
}

TEST_CASE("regularity") {
  const int cap = 5;
  const RegularityReport bad = regularity_check({P(cap, 1), P(cap, 1).pow(2)}, cap);
  CHECK_FALSE(bad.pass());
  CHECK(bad.graded.first_failure() == 2);
  CHECK(regularity_check({P(cap, 1), P(cap, 2), P(cap, 3)}, cap).pass());
  CHECK(regularity_check({P(cap, 2), P(cap, 1)}, cap).pass());
  // P1 P2 is a zero divisor modulo P1.
  CHECK_FALSE(regularity_check({P(cap, 1), P(cap, 1) * P(cap, 2)}, cap).pass());
}
