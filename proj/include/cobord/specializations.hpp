#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cobord/chern.hpp"
#include "cobord/fgl.hpp"
#include "cobord/ideal.hpp"

namespace cobord {

// ---- eliminations ---------------------------------------------------------

struct EliminationStep {
  int degree = 0;
  std::pair<int, int> pivot;  ///< entry solved for P_degree
  Rational pivot_coefficient;
  GradedPoly image;
  std::size_t entries_checked = 0;  ///< other entries of this weight verified to vanish
};

struct Elimination {
  Substitution substitution;
  int free_count = 0;  ///< P_1..P_free_count stay free
  std::vector<EliminationStep> steps;
};

/// Quotient by (α_ij : i, j >= 2): P_1, P_2 free, P_n (n >= 3) solved from
/// α_{2,n-1}. Throws ConstructionFailed when blocked or inconsistent.
Elimination abel_eliminate(const FormalGroupLaw& universal);

/// Generators α_ij, i, j >= 2, i <= j, of weight <= cap.
IdealSpec abel_ideal(const FormalGroupLaw& universal);

/// No coefficient at x^i y^j with i, j >= 2.
bool has_abel_shape(const FormalGroupLaw& f);

struct BuchstaberData {
  BiSeries a;  ///< F (x w(y) - y w(x))
  std::map<std::pair<int, int>, GradedPoly> entries;
  Elimination elimination;

  /// A_ij = -A_ji for all stored entries.
  bool antisymmetric() const;
};

/// A(x, y) for a law, known through total degree cap + 2.
BiSeries buchstaber_series(const FormalGroupLaw& f);

/// P_1..P_4 free, P_n (n >= 5) solved from A_{3,n-1}.
BuchstaberData buchstaber_eliminate(const FormalGroupLaw& universal);

/// Generators A_ij, 3 <= i < j, of weight i + j - 2 <= cap.
IdealSpec buchstaber_ideal(const BuchstaberData& data, int cap);

// ---- Krichever functional form ----------------------------------------------

struct KricheverReport {
  bool pass = true;
  std::string stage;                         ///< "divisibility" or "functional" on failure
  std::optional<int> failing_degree;         ///< ring weight of the first failure
  std::optional<std::pair<int, int>> index;  ///< (i, j) of the first failure
  std::optional<GradedPoly> residual;
};

/// Checks F = x w(y) + y w(x) - w'(0) x y + x^2 y^2 Q with
/// Q (x w(y) - y w(x)) = w(x) beta(x) - w(y) beta(y).
KricheverReport krichever_form_check(const FormalGroupLaw& f);

// ---- Krichever-Höhn genus -----------------------------------------------------

struct HoehnGenus {
  int cap = 0;
  std::array<GradedPoly, 4> p;  ///< weights 1..4
  std::string symbol;           ///< ring symbol of the p's
  bool graded_rational = false;  ///< p_i = q_i t^i with a grading variable t
  Series1 f;                    ///< exponent, x + O(x^2)
  Series1 h_regular;            ///< h - 1/x
  std::vector<GradedPoly> images;  ///< images[n-1] = image of P_n
  bool residual_zero = false;

  /// Images as rationals (graded_rational only): the coefficient of t^n.
  std::vector<Rational> rational_images() const;
  std::array<Rational, 4> rational_p() const;
  /// The law with logarithm reversion(f).
  FormalGroupLaw law() const;
};

/// Solves (h')^2 = h^4 + p1 h^3 + p2 h^2 + p3 h + p4 for h = f'/f.
/// Each p_i must be zero or homogeneous of weight i; their ring cap bounds
/// the images computed.
HoehnGenus hoehn_solve(const std::array<GradedPoly, 4>& p, int cap, std::string symbol);

/// Rational parameters, carried as q_i t^i in a one-variable ring.
HoehnGenus hoehn_solve(const std::array<Rational, 4>& q, int cap);

/// p_i = the free variable of weight i in a ring with symbol "p".
HoehnGenus hoehn_solve_generic(int cap);

/// (x u' - u)^2 - u^4 - p1 x u^3 - p2 x^2 u^2 - p3 x^3 u - p4 x^4 with u = x h.
Series1 hoehn_residual(const Series1& u, const std::array<GradedPoly, 4>& p);

struct KricheverParams {
  bool success = false;
  std::array<GradedPoly, 4> p;
  std::optional<int> failing_order;
  std::optional<GradedPoly> residual;
};

/// Reads p_1..p_4 off the first four orders of the exponent and verifies the
/// equation at every remaining order through the cap.
KricheverParams krichever_params_of(const FormalGroupLaw& f);

// ---- φ_W ------------------------------------------------------------------------

/// *-products of the W-generators and the genus φ_W that kills x_k, k >= 5.
class PhiW {
 public:
  /// `generators[k]` is x_k for k = 1 and 3..cap (index 2 unused).
  PhiW(const ChernCalculus& chern, GradedPoly v_class, std::map<int, GradedPoly> generators);

  int cap() const { return chern_.cap(); }
  /// Partitions of n with no part equal to 2.
  const std::vector<Partition>& monomial_labels(int n) const;
  /// x_{p_1} * x_{p_2} * ... in the order of the parts.
  const std::vector<GradedPoly>& star_monomials(int n) const;
  /// Rank of the star monomials in degree n.
  std::size_t span_rank(int n) const;
  bool spans_w(int n) const;

  GradedPoly star(const GradedPoly& a, const GradedPoly& b) const;
  /// Polynomial in X1, X3, X4 (symbol "X", variable index = weight).
  GradedPoly apply(const GradedPoly& z) const;
  /// Coordinates of a W class in the star monomials of its degree.
  Vector star_coordinates(const GradedPoly& z, int n) const;

 private:
  const ChernCalculus& chern_;
  GradedPoly v_;
  std::map<int, GradedPoly> gens_;
  std::vector<std::vector<Partition>> labels_;
  std::vector<std::vector<GradedPoly>> monomials_;
};

}  // namespace cobord
