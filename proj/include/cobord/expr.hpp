#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cobord/graded_poly.hpp"
#include "cobord/rational.hpp"

namespace cobord {

/// Class expressions:
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := rat | [rat '*'] factor ('*' factor)*
///   factor := ('CP' | 'P' | 'x') int ['^' int]
///   rat    := int ['/' int]
/// Indices start at 1. The Unicode minus sign is read as '-'. A factor
/// x<k> names the W-generator x_k and products of such factors are read as
/// star products.
struct Factor {
  enum class Kind { cp, p, x };
  Kind kind = Kind::p;
  int index = 1;
  int exponent = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

struct Term {
  Rational coefficient{1};
  std::vector<Factor> factors;
  friend bool operator==(const Term&, const Term&) = default;
};

struct ClassExpr {
  std::vector<Term> terms;
  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;

  bool uses_w_generators() const;
  int max_index() const;
};

/// Throws ParseError ("line:col: message") or DomainError (zero denominator).
ClassExpr parse_class(std::string_view text);

/// Inverse of parse_class on its own output.
std::string print(const ClassExpr& e);

/// Value in the ring on P_1..P_cap; throws DomainError if x<k> factors occur.
GradedPoly evaluate(const ClassExpr& e, int cap);

/// Expression with one term per monomial, in canonical order.
ClassExpr to_expr(const GradedPoly& p, Factor::Kind kind = Factor::Kind::p);

}  // namespace cobord
