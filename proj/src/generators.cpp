#include "cobord/generators.hpp"

#include "cobord/error.hpp"
#include "cobord/ideal.hpp"
#include "cobord/linalg.hpp"

namespace cobord {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

bool EuclidCombo::certificate() const {
  Integer sum = 0;
  for (const auto& [i, l] : lambdas) sum += l * binomial(m + 1, i);
  return sum == gcd_value && gcd_value > 0;
}

EuclidCombo euclid_combo(int m, int lo, int hi, EuclidCombo::Range range) {
  if (lo > hi || lo < 1 || hi > m) throw DomainError("empty binomial range for m = " + std::to_string(m));
  EuclidCombo c;
  c.m = m;
  c.range = range;
  c.lo = lo;
  c.hi = hi;
  c.gcd_value = binomial(m + 1, lo);
  c.lambdas[lo] = 1;
  for (int i = lo + 1; i <= hi; ++i) {
    const Integer v = binomial(m + 1, i);
    Integer g, a, b;
    mpz_gcdext(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t(), c.gcd_value.get_mpz_t(), v.get_mpz_t());
    for (auto& [j, l] : c.lambdas) l *= a;
    c.lambdas[i] = b;
    c.gcd_value = g;
  }
  return c;
}

namespace {

Integer gcd_of_binomials(int m, int lo, int hi) {
  Integer g = 0;
  for (int i = lo; i <= hi; ++i) g = gcd(g, binomial(m + 1, i));
  return g;
}

}  // namespace

Integer d_of(int m) {
  if (m < 1) throw DomainError("d(m) needs m >= 1");
  return gcd_of_binomials(m, 1, std::max(1, m - 1));
}

Integer d2_of(int m) {
  if (m < 3) throw DomainError("d2(m) needs m >= 3");
  if (m == 3) return binomial(4, 2);
  return gcd_of_binomials(m, 2, m - 2);
}

std::optional<int> prime_power_base(int n) {
  if (n < 2) return std::nullopt;
  int p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

Integer d_closed_form(int m) {
  auto p = prime_power_base(m + 1);
  return p ? Integer(*p) : Integer(1);
}

NovikovResult novikov_check(int n, const Rational& s) {
  if (!is_integer(s)) throw DomainError("Novikov criterion needs an integral s-number");
  NovikovResult r;
  r.expected = 1;
  for (int candidate : {n, n + 1}) {
    auto p = prime_power_base(candidate);
    if (p && *p != 2) r.expected = *p;
  }
  if (s == 0) {
    r.odd_part = 0;
    r.reason = "s-number vanishes";
    return r;
  }
  r.odd_part = odd_part(s.get_num());
  r.pass = r.odd_part == r.expected;
  if (!r.pass) r.reason = "odd part " + r.odd_part.get_str() + ", expected " + r.expected.get_str();
  return r;
}

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::e: return "e";
    case GeneratorKind::z: return "z";
    case GeneratorKind::x: return "x";
    case GeneratorKind::y: return "y";
  }
  return "?";
}

std::string GeneratorRecord::name() const { return to_string(kind) + std::to_string(degree); }

Certificates compute_certificates(const ChernCalculus& chern, const GradedPoly& cls, int degree) {
  Certificates c;
  c.w_member = chern.is_w_class(cls);
  c.su_member = chern.is_su_class(cls);
  const Rational s = chern.s_number(cls, degree);
  if (is_integer(s)) {
    c.novikov = novikov_check(degree, s);
  } else {
    c.novikov.reason = "non-integral s-number";
  }
  return c;
}

bool record_consistent(const ChernCalculus& chern, const GeneratorRecord& r) {
  const Certificates c = compute_certificates(chern, r.cls, r.degree);
  return chern.s_number(r.cls, r.degree) == r.s_value && c.w_member == r.certificates.w_member &&
         c.su_member == r.certificates.su_member && c.novikov.pass == r.certificates.novikov.pass &&
         c.novikov.odd_part == r.certificates.novikov.odd_part && (!r.combo || r.combo->certificate());
}

GeneratorFactory::GeneratorFactory(const FormalGroupLaw& universal, const ChernCalculus& chern)
    : fgl_(universal), chern_(chern) {
  if (universal.cap() != chern.cap()) throw ConfigError("law and Chern calculus disagree on the cap");
}

GeneratorRecord GeneratorFactory::make(GeneratorKind kind, int degree, GradedPoly cls,
                                       std::optional<EuclidCombo> combo) const {
  GeneratorRecord r{kind, degree, cls, chern_.s_number(cls, degree), compute_certificates(chern_, cls, degree),
                    std::move(combo)};
  return r;
}

GeneratorRecord GeneratorFactory::e_generator(int m) const {
  if (m < 1 || m > cap()) throw RangeError("e_m needs 1 <= m <= cap");
  EuclidCombo combo = euclid_combo(m, 1, std::max(1, m - 1), EuclidCombo::Range::full);
  GradedPoly cls(cap());
  for (const auto& [i, l] : combo.lambdas) cls += fgl_.alpha(i, m + 1 - i) * Rational(l);
  return make(GeneratorKind::e, m, cls, combo);
}

GeneratorRecord GeneratorFactory::z_generator(int k) const {
  if (k < 3 || k > cap()) throw RangeError("z_k needs 3 <= k <= cap");
  EuclidCombo combo = euclid_combo(k, 2, k - 1, EuclidCombo::Range::inner);
  GradedPoly cls(cap());
  for (const auto& [i, l] : combo.lambdas) cls += fgl_.alpha(i, k + 1 - i) * Rational(l);
  return make(GeneratorKind::z, k, cls, combo);
}

std::vector<GradedPoly> GeneratorFactory::i_tilde(int l) const {
  std::vector<GradedPoly> gens;
  gens.push_back(GradedPoly::variable(cap(), 2) - ratio(9, 8) * GradedPoly::variable(cap(), 1).pow(2));
  for (int k = 3; k <= l; ++k) gens.push_back(z_generator(k).cls);
  return gens;
}

GeneratorRecord GeneratorFactory::w_generator(int k) const {
  if (k == 1) return make(GeneratorKind::x, 1, GradedPoly::variable(cap(), 1), std::nullopt);
  if (k < 3 || k > cap()) throw RangeError("x_k needs k = 1 or 3 <= k <= cap");
  const GeneratorRecord z = z_generator(k);
  const auto basis = monomial_basis(k);
  const Matrix constraints = chern_.c1_constraints(k, 2);

  // Correction c = Σ a_j s_j over the spanning products s_j of Ĩ(k-1) in degree k.
  const IdealSpec ideal("I~(" + std::to_string(k - 1) + ")", i_tilde(k - 1), cap());
  const DegreePiece piece = ideal_degree_basis(ideal, k);
  const Matrix products = piece.spanning.transposed();  // columns s_j
  const Matrix system = constraints * products;
  Vector rhs = constraints * coordinates(z.cls, basis);
  for (auto& v : rhs) v = -v;
  auto a = solve(system, rhs);
  if (!a) throw ConstructionFailed("no W-correction of z_" + std::to_string(k) + " inside I~(" + std::to_string(k - 1) + ")");
  Vector x = coordinates(z.cls, basis);
  const Vector c = products * *a;
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += c[i];
  GradedPoly cls = from_coordinates(cap(), basis, x);
  if (chern_.s_number(cls, k) < 0) cls = -cls;
  return make(GeneratorKind::x, k, cls, z.combo);
}

std::vector<GeneratorRecord> GeneratorFactory::w_generators() const {
  std::vector<GeneratorRecord> out{w_generator(1)};
  for (int k = 3; k <= cap(); ++k) out.push_back(w_generator(k));
  return out;
}

GradedPoly GeneratorFactory::y4_family(const Rational& c) const {
  return -fgl_.alpha(2, 3) + c * fgl_.alpha(2, 2) * GradedPoly::variable(cap(), 1);
}

Rational GeneratorFactory::y4_su_coefficient() const {
  if (cap() < 4) throw RangeError("y_4 needs cap >= 4");
  const auto basis = monomial_basis(4);
  const Matrix rows = chern_.c1_constraints(4, 1);
  const Vector base = rows * coordinates(y4_family(0), basis);
  const Vector dir = rows * coordinates(fgl_.alpha(2, 2) * GradedPoly::variable(cap(), 1), basis);
  Matrix a(dir.size(), 1);
  Vector b(dir.size());
  for (std::size_t i = 0; i < dir.size(); ++i) {
    a(i, 0) = dir[i];
    b[i] = -base[i];
  }
  auto c = solve(a, b);
  if (!c) throw InvariantViolation("no coefficient makes -a23 + c*a22*P1 an SU class");
  return (*c)[0];
}

std::vector<GeneratorRecord> GeneratorFactory::su_low_generators() const {
  if (cap() < 4) throw RangeError("y_2..y_4 need cap >= 4");
  std::vector<GeneratorRecord> out;
  out.push_back(make(GeneratorKind::y, 2, i_tilde(2)[0], std::nullopt));
  out.push_back(make(GeneratorKind::y, 3, -fgl_.alpha(2, 2), std::nullopt));
  out.push_back(make(GeneratorKind::y, 4, y4_family(y4_su_coefficient()), std::nullopt));
  for (const auto& r : out)
    if (!r.certificates.su_member) throw InvariantViolation(r.name() + " is not an SU class");
  return out;
}

GeneratorRecord GeneratorFactory::su_generator(int i) const {
  if (i < 5 || i > cap()) throw RangeError("su_generator needs 5 <= i <= cap");
  const auto& basis = chern_.basis(i);
  const Matrix c1 = chern_.c1_constraints(i, 1);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < c1.rows(); ++r) rows.push_back(c1.row(r));
  Vector s_row;
  for (const auto& m : basis) s_row.push_back(chern_.s_number(GradedPoly::monomial(cap(), m), i));
  rows.push_back(s_row);
  Vector rhs(c1.rows(), Rational(0));
  Rational target(d_of(i) * d_of(i - 1));
  if (i % 2 == 0) target *= 2;
  rhs.push_back(target);
  auto x = solve(Matrix::from_rows(rows, basis.size()), rhs);
  if (!x) throw ConstructionFailed("no SU class of degree " + std::to_string(i) + " with the prescribed s-number");
  return make(GeneratorKind::y, i, from_coordinates(cap(), basis, *x), std::nullopt);
}

}  // namespace cobord
