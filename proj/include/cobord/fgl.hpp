#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cobord/graded_poly.hpp"
#include "cobord/series.hpp"

namespace cobord {

/// Ring map from the weighted polynomial ring on P_1..P_cap to a target
/// weighted polynomial ring (possibly the same one). Each P_n goes to a
/// homogeneous element of weight n; unassigned generators map to themselves.
class Substitution {
 public:
  explicit Substitution(int cap, std::string target_symbol = "P");

  int cap() const { return cap_; }
  const std::string& target_symbol() const { return target_symbol_; }

  /// Throws DomainError if `image` is not homogeneous of weight n.
  void assign(int n, GradedPoly image);
  const GradedPoly& image(int n) const;
  bool is_assigned(int n) const;

  GradedPoly apply(const GradedPoly& p) const;
  /// First this map, then `next`.
  Substitution then(const Substitution& next) const;

 private:
  int cap_;
  std::string target_symbol_;
  std::vector<GradedPoly> images_;  // index n-1
  std::vector<bool> assigned_;
};

enum class FglOrigin { universal, abel, buchstaber, hoehn, custom };

std::string to_string(FglOrigin origin);

/// A bivariate series verified to satisfy the formal group law axioms up to
/// its truncation, together with its invariant form
///   w(x) = 1 + Σ α_{1i} x^i   (coefficient of y in F)
/// and beta(x) = (w'(x) - w'(0)) / (2x).
class FormalGroupLaw {
 public:
  /// Validates unit, symmetry, homogeneity and (optionally) associativity;
  /// throws InvariantViolation on failure.
  FormalGroupLaw(BiSeries f, FglOrigin origin, std::optional<Series1> logarithm = std::nullopt,
                 std::string ring_symbol = "P", bool check_associativity = true);

  int cap() const { return f_.cap(); }
  const BiSeries& series() const { return f_; }
  const std::optional<Series1>& logarithm() const { return log_; }
  const Series1& w() const { return w_; }
  const Series1& beta() const { return beta_; }
  FglOrigin origin() const { return origin_; }
  const std::string& ring_symbol() const { return ring_symbol_; }

  /// Coefficient of x^i y^j. Throws RangeError outside i + j <= cap + 1.
  GradedPoly alpha(int i, int j) const;

  /// The logarithm, or ∫ dx / w(x) when none was supplied.
  Series1 log_series() const;
  /// Compositional inverse of the logarithm.
  Series1 exponent() const;
  /// ι(x) with F(x, ι(x)) = 0.
  Series1 formal_inverse() const;

 private:
  BiSeries f_;
  FglOrigin origin_;
  std::optional<Series1> log_;
  std::string ring_symbol_;
  Series1 w_;
  Series1 beta_;
};

/// x + Σ_{n=1}^{cap} P_n x^{n+1} / (n+1).
Series1 mishchenko_log(int cap);

/// exp(log x + log y) for a logarithm x + O(x^2) known through x^{cap+1}.
FormalGroupLaw fgl_from_logarithm(const Series1& log, FglOrigin origin, std::string ring_symbol = "P");

/// exp(log x + log y) with exp the reversion of the Mishchenko logarithm.
FormalGroupLaw universal_fgl(int cap);

/// The additive law x + y.
FormalGroupLaw additive_fgl(int cap);

/// Coefficient-wise image under `sub`; axioms re-checked in the target.
FormalGroupLaw specialize_fgl(const FormalGroupLaw& f, const Substitution& sub,
                              FglOrigin origin = FglOrigin::custom);

/// Coefficient of y^1 in F, as a series in x.
Series1 invariant_form(const BiSeries& f);
/// (w'(x) - w'(0)) / (2x).
Series1 beta_of(const Series1& w);

/// First failing check among unit, symmetry, homogeneity, associativity, or
/// nullopt when all pass.
std::optional<std::string> fgl_axiom_failure(const BiSeries& f, bool check_associativity = true);

}  // namespace cobord
