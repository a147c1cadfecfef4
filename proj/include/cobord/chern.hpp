#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cobord/graded_poly.hpp"
#include "cobord/linalg.hpp"
#include "cobord/partitions.hpp"

namespace cobord {

/// All Chern numbers of a class in one degree, aligned with
/// ChernCalculus::partitions(degree).
struct ChernVector {
  int degree = 0;
  std::vector<Rational> numbers;
  friend bool operator==(const ChernVector&, const ChernVector&) = default;
};

/// Chern-number calculus on MU_* ⊗ Q in the basis of products of projective
/// spaces. Everything is tabulated per degree at construction; the object is
/// immutable afterwards and safe to share between threads.
///
/// A basis monomial P_{n_1} ... P_{n_r} has total Chern class
/// Π (1 + t_i)^{n_i + 1} in Z[t_1..t_r]/(t_i^{n_i + 1}); c_ω is the top
/// coefficient of the product of the homogeneous pieces c_{ω_j}. Classes are
/// rational combinations and the pairing is extended linearly.
class ChernCalculus {
 public:
  explicit ChernCalculus(int cap);

  int cap() const { return cap_; }
  const std::vector<Partition>& partitions_of(int n) const;
  const std::vector<Monomial>& basis(int n) const;
  /// numbers(n)(i, j) = c_{partitions_of(n)[i]} [basis(n)[j]].
  const Matrix& numbers(int n) const;
  /// Coefficients of the Newton polynomial s_n in the c_ω.
  const std::map<Partition, Integer>& newton(int n) const;

  Rational chern_number(const GradedPoly& z, const Partition& omega) const;
  ChernVector chern_vector(const GradedPoly& z, int n) const;

  /// Characteristic number s_n of the weight-n class z (0 for z = 0).
  Rational s_number(const GradedPoly& z) const;
  Rational s_number(const GradedPoly& z, int n) const;

  /// The unique class with the given Chern numbers.
  GradedPoly class_from_chern(const ChernVector& v) const;

  /// Class of the submanifold dual to c_1:
  /// c_ω[∂z] = <c_ω(c(z) / (1 + c_1)) c_1, [z]>.
  GradedPoly boundary(const GradedPoly& z) const;

  /// All Chern numbers containing c_1^2 vanish.
  bool is_w_class(const GradedPoly& z) const;
  /// All Chern numbers containing c_1 vanish.
  bool is_su_class(const GradedPoly& z) const;

  /// Rows of numbers(n) whose partition has at least `ones` parts equal to 1.
  Matrix c1_constraints(int n, int ones) const;

  /// Basis of W_{2n} ⊗ Q (c_1^2-numbers vanish); dimension p(n) - p(n-2).
  std::vector<GradedPoly> w_basis(int n) const;
  /// Basis of the SU subspace (c_1-numbers vanish).
  std::vector<GradedPoly> su_basis(int n) const;

  /// Weight of a nonzero homogeneous class; throws DomainError otherwise.
  static int class_weight(const GradedPoly& z);

 private:
  struct Degree {
    std::vector<Partition> partitions;
    std::vector<Monomial> basis;
    Matrix numbers;
    Matrix inverse;
    std::map<Partition, Integer> newton;
    Vector s_row;                          // s_n on each basis monomial
    std::vector<GradedPoly> boundary_img;  // ∂ of each basis monomial
  };

  const Degree& degree(int n) const;
  void check_degree(int n) const;

  int cap_;
  std::vector<Degree> degrees_;
};

/// a * b = ab + 2 [V] ∂a ∂b on W, with [V] supplied by the caller (the
/// coefficient α_12 of the universal law). Both factors must lie in W.
GradedPoly star_product(const ChernCalculus& chern, const GradedPoly& v_class, const GradedPoly& a,
                        const GradedPoly& b);

}  // namespace cobord
