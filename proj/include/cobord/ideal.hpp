#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobord/graded_poly.hpp"
#include "cobord/linalg.hpp"

namespace cobord {

/// Homogeneous ideal of the weighted polynomial ring, given by generators.
struct IdealSpec {
  /// Validates that every generator is nonzero, homogeneous and of weight at
  /// most `cap`; throws DomainError otherwise.
  IdealSpec(std::string name, std::vector<GradedPoly> generators, int cap);

  std::string name;
  std::vector<GradedPoly> generators;
  int cap;
};

struct DegreePiece {
  int degree = 0;
  std::size_t ideal_dim = 0;
  std::size_t ambient_dim = 0;
  std::size_t quotient_dim() const { return ambient_dim - ideal_dim; }
  /// Coordinates of the spanning products m·g in monomial_basis(degree).
  Matrix spanning;
};

/// Span of {m·g : weight(m·g) = n}; rank by fraction-free elimination.
DegreePiece ideal_degree_basis(const IdealSpec& ideal, int n);

/// Exact membership of z (tested degree by degree).
bool ideal_member(const IdealSpec& ideal, const GradedPoly& z);

/// Coefficients c with z = Σ c_i s_i over the spanning products of the
/// degree-n piece (free variables zero), or nullopt when z is not a member.
std::optional<Vector> ideal_coordinates(const IdealSpec& ideal, const GradedPoly& z, int n);

struct GradedRow {
  int degree = 0;
  std::size_t ideal_dim = 0;
  std::size_t ambient_dim = 0;
  std::size_t quotient_dim = 0;
  std::optional<std::int64_t> expected;
  bool pass = true;
};

struct GradedReport {
  std::string name;
  std::vector<GradedRow> rows;
  bool pass() const;
  std::optional<int> first_failure() const;
};

/// Quotient dimensions for degrees 0..cap, optionally compared with
/// `expected[n]`.
GradedReport graded_report(const IdealSpec& ideal,
                           const std::optional<std::vector<std::int64_t>>& expected = std::nullopt);

struct IdealComparison {
  bool equal = true;
  std::optional<int> first_failing_degree;
  std::vector<std::pair<std::size_t, std::size_t>> dims;  // per degree (a, b)
  std::vector<std::string> failures;
};

/// Per-degree dimension equality plus two-sided generator membership.
IdealComparison ideals_equal(const IdealSpec& a, const IdealSpec& b, int cap);

/// Coefficients of Π_{i=1}^{cap} 1/(1 - t^i) · Π_j (1 - t^{d_j}) through t^cap.
std::vector<std::int64_t> hilbert_prediction(const std::vector<int>& degrees, int cap);

/// Dimensions of a free weighted polynomial ring on generators of the given
/// weights, through degree cap.
std::vector<std::int64_t> free_ring_dimensions(const std::vector<int>& weights, int cap);

struct RegularityReport {
  GradedReport graded;
  std::vector<std::int64_t> predicted;
  bool pass() const { return graded.pass(); }
};

/// Compares quotient dimensions with the Hilbert series of a regular
/// sequence of the same degrees. For homogeneous sequences, agreement through
/// degree n rules out a Koszul defect through degree n.
RegularityReport regularity_check(const std::vector<GradedPoly>& sequence, int cap,
                                  std::string name = "sequence");

}  // namespace cobord
