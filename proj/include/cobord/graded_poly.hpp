#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/rational.hpp"

namespace cobord {

/// Largest supported truncation degree.
inline constexpr int kMaxCap = 16;

/// Monomial in the weighted generators v_1, v_2, ... where v_n has weight n.
/// The same type serves the cobordism ring (v_n = P_n = [CP_n]) and every
/// target ring of a classifying map, since all of them are weighted
/// polynomial rings whose variables can be indexed by their weight.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(int index, int power = 1);
  /// Product v_{p_1} v_{p_2} ... for the given parts.
  static Monomial from_parts(std::span<const int> parts);

  int exponent(int index) const;
  int weight() const;
  bool is_one() const;
  /// Parts of the partition this monomial encodes, non-increasing.
  std::vector<int> parts() const;
  /// Largest index with a nonzero exponent, 0 for the unit monomial.
  int max_index() const;

  Monomial operator*(const Monomial& other) const;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxCap + 1> exp_{};
};

/// Canonical term order: weight ascending, then exponent vectors
/// (e_1, e_2, ...) in descending lexicographic order. P1^3 < P1*P2 < P3.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Element of a weighted polynomial ring over Q, truncated at weight `cap`.
/// Never stores zero coefficients or terms of weight above the cap.
class GradedPoly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  /// The zero element of the cap-0 ring; a placeholder to be assigned.
  GradedPoly() : GradedPoly(0) {}
  explicit GradedPoly(int cap);
  GradedPoly(int cap, const Rational& constant);

  static GradedPoly variable(int cap, int index);
  static GradedPoly monomial(int cap, const Monomial& m, const Rational& coeff = 1);

  int cap() const { return cap_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  bool is_constant() const;

  /// Weight of a nonzero homogeneous element; nullopt for zero or mixed.
  std::optional<int> homogeneous_weight() const;
  /// Zero counts as homogeneous of every weight.
  bool is_homogeneous(int weight) const;
  GradedPoly homogeneous_part(int weight) const;
  /// -1 for zero.
  int max_weight() const;
  /// Largest variable index occurring, 0 for constants.
  int max_index() const;

  void add_term(const Monomial& m, const Rational& coeff);

  GradedPoly& operator+=(const GradedPoly& other);
  GradedPoly& operator-=(const GradedPoly& other);
  GradedPoly& operator*=(const Rational& scalar);
  GradedPoly operator-() const;

  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  friend GradedPoly operator*(GradedPoly a, const Rational& s) { return a *= s; }
  friend GradedPoly operator*(const Rational& s, GradedPoly a) { return a *= s; }
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  GradedPoly pow(int exponent) const;

  /// Canonical text "q*P1^a*P2^b+..." in term order; "0" for zero.
  std::string to_string(std::string_view symbol = "P") const;

 private:
  void require_same_cap(const GradedPoly& other) const;

  int cap_;
  Terms terms_;
};

/// Monomials of weight exactly `n` in variables v_1..v_n, in canonical order.
std::vector<Monomial> monomial_basis(int n);

/// Coordinates of the weight-n part of `p` in `monomial_basis(n)`.
std::vector<Rational> coordinates(const GradedPoly& p, std::span<const Monomial> basis);

GradedPoly from_coordinates(int cap, std::span<const Monomial> basis,
                            std::span<const Rational> coords);

}  // namespace cobord
