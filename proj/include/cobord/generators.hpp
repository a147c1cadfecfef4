#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cobord/chern.hpp"
#include "cobord/fgl.hpp"
#include "cobord/graded_poly.hpp"

namespace cobord {

Integer binomial(int n, int k);

/// Bezout data for a list of binomials C(m+1, i), i in [lo, hi].
struct EuclidCombo {
  enum class Range { full, inner };

  int m = 0;
  Range range = Range::full;
  int lo = 0;
  int hi = 0;
  std::map<int, Integer> lambdas;
  Integer gcd_value;

  /// Σ λ_i C(m+1, i) == gcd_value, recomputed.
  bool certificate() const;
};

/// Folds the binomials in increasing i with the two-term extended gcd.
EuclidCombo euclid_combo(int m, int lo, int hi, EuclidCombo::Range range);

/// gcd of C(m+1, i) over 1 <= i <= max(1, m-1).
Integer d_of(int m);
/// gcd of C(m+1, i) over 2 <= i <= m-2 (just i = 2 when m = 3).
Integer d2_of(int m);
/// p when m+1 is a power of the prime p, 1 otherwise.
Integer d_closed_form(int m);

/// p if n = p^l with p prime and l >= 1.
std::optional<int> prime_power_base(int n);

struct NovikovResult {
  bool pass = false;
  Integer odd_part;
  Integer expected;
  std::string reason;
};

/// Odd part of |s| must be p when n or n+1 is a power of the odd prime p,
/// and 1 otherwise. Throws DomainError for non-integral s.
NovikovResult novikov_check(int n, const Rational& s);

enum class GeneratorKind { e, z, x, y };

std::string to_string(GeneratorKind kind);

struct Certificates {
  bool w_member = false;
  bool su_member = false;
  NovikovResult novikov;
};

struct GeneratorRecord {
  GeneratorKind kind;
  int degree;
  GradedPoly cls;
  Rational s_value;
  Certificates certificates;
  std::optional<EuclidCombo> combo;

  std::string name() const;
};

Certificates compute_certificates(const ChernCalculus& chern, const GradedPoly& cls, int degree);

/// Certificates and s-value recompute to the stored values.
bool record_consistent(const ChernCalculus& chern, const GeneratorRecord& r);

/// Builds the generator families from the universal law. Stateless apart
/// from references; every call recomputes.
class GeneratorFactory {
 public:
  GeneratorFactory(const FormalGroupLaw& universal, const ChernCalculus& chern);

  int cap() const { return chern_.cap(); }

  GeneratorRecord e_generator(int m) const;
  GeneratorRecord z_generator(int k) const;
  /// k = 1 gives P_1; otherwise 3 <= k <= cap.
  GeneratorRecord w_generator(int k) const;
  /// x_1, x_3, ..., x_cap.
  std::vector<GeneratorRecord> w_generators() const;

  /// The coefficient c = 3/2 of the published formula for y_4.
  static Rational y4_literal_coefficient() { return ratio(3, 2); }
  /// y_2, y_3, y_4 with y_4 built from the SU coefficient; throws
  /// InvariantViolation if any is not SU.
  std::vector<GeneratorRecord> su_low_generators() const;
  /// -α_23 + c α_22 P_1.
  GradedPoly y4_family(const Rational& c) const;
  /// Solves for the c making y4_family(c) an SU class.
  Rational y4_su_coefficient() const;

  GeneratorRecord su_generator(int i) const;

  /// (y_2, z_3, ..., z_l).
  std::vector<GradedPoly> i_tilde(int l) const;

 private:
  GeneratorRecord make(GeneratorKind kind, int degree, GradedPoly cls, std::optional<EuclidCombo> combo) const;

  const FormalGroupLaw& fgl_;
  const ChernCalculus& chern_;
};

}  // namespace cobord
