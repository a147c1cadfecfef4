#include "cobord/chern.hpp"

#include <algorithm>
#include <functional>

#include "cobord/error.hpp"

namespace cobord {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantViolation("Chern number overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantViolation("Chern number overflow");
  return r;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Z[t_1..t_r] / (t_i^{b_i + 1}), stored densely in mixed radix.
class TruncatedRing {
 public:
  using Elem = std::vector<std::int64_t>;

  explicit TruncatedRing(std::vector<int> bounds) : bounds_(std::move(bounds)) {
    size_ = 1;
    for (int b : bounds_) size_ *= static_cast<std::size_t>(b + 1);
    exps_.resize(size_);
    degree_.resize(size_);
    for (std::size_t idx = 0; idx < size_; ++idx) {
      std::size_t rest = idx;
      std::vector<int> e(bounds_.size());
      int d = 0;
      for (std::size_t i = 0; i < bounds_.size(); ++i) {
        e[i] = static_cast<int>(rest % static_cast<std::size_t>(bounds_[i] + 1));
        rest /= static_cast<std::size_t>(bounds_[i] + 1);
        d += e[i];
      }
      exps_[idx] = std::move(e);
      degree_[idx] = d;
    }
  }

  std::size_t size() const { return size_; }
  int degree(std::size_t idx) const { return degree_[idx]; }
  const std::vector<int>& exps(std::size_t idx) const { return exps_[idx]; }
  std::size_t top_index() const { return size_ - 1; }

  Elem zero() const { return Elem(size_, 0); }
  Elem one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem out = zero();
    for (std::size_t i = 0; i < size_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < size_; ++j) {
        if (b[j] == 0) continue;
        if (!fits(i, j)) continue;
        out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
      }
    }
    return out;
  }

  // Top coefficient of a * b.
  std::int64_t top_of_product(const Elem& a, const Elem& b) const {
    std::int64_t acc = 0;
    const std::size_t top = top_index();
    for (std::size_t i = 0; i < size_; ++i) {
      if (a[i] == 0) continue;
      const std::size_t j = top - i;
      if (b[j] != 0) acc = checked_add(acc, checked_mul(a[i], b[j]));
    }
    return acc;
  }

  Elem homogeneous(const Elem& a, int k) const {
    Elem out = zero();
    for (std::size_t i = 0; i < size_; ++i)
      if (degree_[i] == k) out[i] = a[i];
    return out;
  }

 private:
  bool fits(std::size_t i, std::size_t j) const {
    const auto& ei = exps_[i];
    const auto& ej = exps_[j];
    for (std::size_t k = 0; k < bounds_.size(); ++k)
      if (ei[k] + ej[k] > bounds_[k]) return false;
    return true;
  }

  std::vector<int> bounds_;
  std::size_t size_;
  std::vector<std::vector<int>> exps_;
  std::vector<int> degree_;
};

// Values of top(start · c_ω) for every partition ω of n, using the
// homogeneous pieces `pieces[k]`.
std::map<Partition, std::int64_t> evaluate_all(const TruncatedRing& ring,
                                               const std::vector<TruncatedRing::Elem>& pieces,
                                               const TruncatedRing::Elem& start, int n) {
  std::map<Partition, std::int64_t> out;
  Partition current;
  std::function<void(int, int, const TruncatedRing::Elem&)> rec = [&](int remaining, int max_part,
                                                                     const TruncatedRing::Elem& acc) {
    if (remaining == 0) {
      out[current] = acc[ring.top_index()];
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      if (part == remaining) {
        out[current] = ring.top_of_product(acc, pieces[part]);
      } else {
        rec(remaining - part, part, ring.mul(acc, pieces[part]));
      }
      current.pop_back();
    }
  };
  rec(n, n, start);
  return out;
}

std::vector<TruncatedRing::Elem> homogeneous_pieces(const TruncatedRing& ring, const TruncatedRing::Elem& c,
                                                    int max_degree) {
  std::vector<TruncatedRing::Elem> pieces;
  for (int k = 0; k <= max_degree; ++k) pieces.push_back(ring.homogeneous(c, k));
  return pieces;
}

struct MonomialChernData {
  std::map<Partition, std::int64_t> numbers;
  std::map<Partition, std::int64_t> boundary_numbers;  // partitions of n - 1
};

MonomialChernData chern_data(const Monomial& m) {
  const std::vector<int> parts = m.parts();
  const int n = m.weight();
  MonomialChernData out;
  if (parts.empty()) {
    out.numbers[{}] = 1;
    return out;
  }
  const TruncatedRing ring(parts);
  TruncatedRing::Elem c = ring.zero();
  for (std::size_t idx = 0; idx < ring.size(); ++idx) {
    std::int64_t v = 1;
    const auto& e = ring.exps(idx);
    for (std::size_t i = 0; i < parts.size(); ++i) v = checked_mul(v, binomial(parts[i] + 1, e[i]));
    c[idx] = v;
  }
  const auto pieces = homogeneous_pieces(ring, c, n);
  out.numbers = evaluate_all(ring, pieces, ring.one(), n);

  // c' = c / (1 + c_1), then <c'_ω c_1, [M]> for ω of n - 1.
  const TruncatedRing::Elem& c1 = pieces[1];
  TruncatedRing::Elem inv = ring.one();
  TruncatedRing::Elem power = ring.one();
  for (int k = 1; k <= n; ++k) {
    power = ring.mul(power, c1);
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    for (std::size_t i = 0; i < ring.size(); ++i) inv[i] = checked_add(inv[i], checked_mul(sign, power[i]));
  }
  const auto cprime = ring.mul(c, inv);
  const auto prime_pieces = homogeneous_pieces(ring, cprime, n);
  if (n - 1 == 0) {
    out.boundary_numbers[{}] = c1[ring.top_index()];
  } else {
    out.boundary_numbers = evaluate_all(ring, prime_pieces, c1, n - 1);
  }
  return out;
}

std::map<Partition, Integer> add_part(const std::map<Partition, Integer>& poly, int part, const Integer& factor) {
  std::map<Partition, Integer> out;
  for (const auto& [p, c] : poly) {
    Partition q = p;
    q.push_back(part);
    std::sort(q.begin(), q.end(), std::greater<>());
    out[q] += c * factor;
  }
  return out;
}

}  // namespace

ChernCalculus::ChernCalculus(int cap) : cap_(cap) {
  if (cap < 0 || cap > kMaxCap) throw ConfigError("cap out of range");
  // Newton polynomials p_n in the elementary symmetric functions.
  std::vector<std::map<Partition, Integer>> newton(static_cast<std::size_t>(cap) + 1);
  for (int k = 1; k <= cap; ++k) {
    std::map<Partition, Integer> pk;
    for (int i = 1; i < k; ++i) {
      const Integer sign = (i % 2 == 1) ? 1 : -1;
      for (const auto& [p, c] : add_part(newton[k - i], i, sign)) pk[p] += c;
    }
    pk[{k}] += Integer((k % 2 == 1) ? k : -k);
    for (auto it = pk.begin(); it != pk.end();) it = (it->second == 0) ? pk.erase(it) : std::next(it);
    newton[k] = std::move(pk);
  }

  std::vector<std::vector<MonomialChernData>> data(static_cast<std::size_t>(cap) + 1);
  for (int n = 0; n <= cap; ++n) {
    Degree d;
    d.partitions = partitions(n);
    d.basis = monomial_basis(n);
    d.newton = newton[n];
    const std::size_t size = d.basis.size();
    d.numbers = Matrix(d.partitions.size(), size);
    for (std::size_t j = 0; j < size; ++j) {
      data[n].push_back(chern_data(d.basis[j]));
      for (std::size_t i = 0; i < d.partitions.size(); ++i)
        d.numbers(i, j) = Rational(static_cast<long>(data[n][j].numbers.at(d.partitions[i])));
    }
    auto inv = inverse(d.numbers);
    if (!inv) throw InvariantViolation("Chern-number pairing is singular in degree " + std::to_string(n));
    d.inverse = std::move(*inv);
    d.s_row = Vector(size);
    if (n >= 1) {
      for (std::size_t j = 0; j < size; ++j) {
        Rational s = 0;
        for (const auto& [p, c] : d.newton) s += Rational(c) * Rational(static_cast<long>(data[n][j].numbers.at(p)));
        d.s_row[j] = s;
      }
    }
    degrees_.push_back(std::move(d));
  }
  // ∂ of each basis monomial, reconstructed from its Chern numbers.
  for (int n = 1; n <= cap; ++n) {
    const Degree& lower = degrees_[n - 1];
    Degree& d = degrees_[n];
    for (std::size_t j = 0; j < d.basis.size(); ++j) {
      ChernVector v{n - 1, {}};
      for (const auto& p : lower.partitions) v.numbers.emplace_back(static_cast<long>(data[n][j].boundary_numbers.at(p)));
      d.boundary_img.push_back(class_from_chern(v));
    }
  }
}

void ChernCalculus::check_degree(int n) const {
  if (n < 0 || n > cap_) throw RangeError("degree " + std::to_string(n) + " outside the cap");
}

const ChernCalculus::Degree& ChernCalculus::degree(int n) const {
  check_degree(n);
  return degrees_[n];
}

const std::vector<Partition>& ChernCalculus::partitions_of(int n) const { return degree(n).partitions; }
const std::vector<Monomial>& ChernCalculus::basis(int n) const { return degree(n).basis; }
const Matrix& ChernCalculus::numbers(int n) const { return degree(n).numbers; }
const std::map<Partition, Integer>& ChernCalculus::newton(int n) const { return degree(n).newton; }

int ChernCalculus::class_weight(const GradedPoly& z) {
  auto w = z.homogeneous_weight();
  if (!w) throw DomainError(z.is_zero() ? "zero class has no weight" : "class is not homogeneous");
  return *w;
}

ChernVector ChernCalculus::chern_vector(const GradedPoly& z, int n) const {
  const Degree& d = degree(n);
  if (!z.is_homogeneous(n)) throw DomainError("class is not homogeneous of weight " + std::to_string(n));
  return ChernVector{n, d.numbers * coordinates(z, d.basis)};
}

Rational ChernCalculus::chern_number(const GradedPoly& z, const Partition& omega) const {
  Partition sorted = omega;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  int n = 0;
  for (int p : sorted) {
    if (p < 1) throw DomainError("partition parts must be positive");
    n += p;
  }
  if (!z.is_homogeneous(n)) throw DomainError("degree of the Chern monomial does not match the class weight");
  const Degree& d = degree(n);
  const auto it = std::find(d.partitions.begin(), d.partitions.end(), sorted);
  const auto row = static_cast<std::size_t>(it - d.partitions.begin());
  Rational acc = 0;
  for (std::size_t j = 0; j < d.basis.size(); ++j) {
    const Rational c = z.coefficient(d.basis[j]);
    if (c != 0) acc += c * d.numbers(row, j);
  }
  return acc;
}

Rational ChernCalculus::s_number(const GradedPoly& z) const {
  if (z.is_zero()) return 0;
  return s_number(z, class_weight(z));
}

Rational ChernCalculus::s_number(const GradedPoly& z, int n) const {
  if (n < 1) throw DomainError("s-number needs positive degree");
  const Degree& d = degree(n);
  if (!z.is_homogeneous(n)) throw DomainError("class is not homogeneous of weight " + std::to_string(n));
  Rational acc = 0;
  for (std::size_t j = 0; j < d.basis.size(); ++j) {
    const Rational c = z.coefficient(d.basis[j]);
    if (c != 0) acc += c * d.s_row[j];
  }
  return acc;
}

GradedPoly ChernCalculus::class_from_chern(const ChernVector& v) const {
  const Degree& d = degree(v.degree);
  if (v.numbers.size() != d.partitions.size()) throw DomainError("Chern vector is incomplete for its degree");
  return from_coordinates(cap_, d.basis, d.inverse * v.numbers);
}

GradedPoly ChernCalculus::boundary(const GradedPoly& z) const {
  if (z.is_zero()) return GradedPoly(cap_);
  const int n = class_weight(z);
  if (n == 0) throw DomainError("boundary of a weight-0 class");
  const Degree& d = degree(n);
  GradedPoly out(cap_);
  for (std::size_t j = 0; j < d.basis.size(); ++j) {
    const Rational c = z.coefficient(d.basis[j]);
    if (c != 0) out += d.boundary_img[j] * c;
  }
  return out;
}

Matrix ChernCalculus::c1_constraints(int n, int ones) const {
  const Degree& d = degree(n);
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < d.partitions.size(); ++i) {
    const auto count = std::count(d.partitions[i].begin(), d.partitions[i].end(), 1);
    if (count >= ones) rows.push_back(d.numbers.row(i));
  }
  return Matrix::from_rows(rows, d.basis.size());
}

bool ChernCalculus::is_w_class(const GradedPoly& z) const {
  if (z.is_zero()) return true;
  const int n = class_weight(z);
  const Matrix c = c1_constraints(n, 2);
  const Vector v = c * coordinates(z, degree(n).basis);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

bool ChernCalculus::is_su_class(const GradedPoly& z) const {
  if (z.is_zero()) return true;
  const int n = class_weight(z);
  const Matrix c = c1_constraints(n, 1);
  const Vector v = c * coordinates(z, degree(n).basis);
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

std::vector<GradedPoly> ChernCalculus::w_basis(int n) const {
  std::vector<GradedPoly> out;
  for (const auto& v : nullspace(c1_constraints(n, 2))) out.push_back(from_coordinates(cap_, degree(n).basis, v));
  return out;
}

std::vector<GradedPoly> ChernCalculus::su_basis(int n) const {
  std::vector<GradedPoly> out;
  for (const auto& v : nullspace(c1_constraints(n, 1))) out.push_back(from_coordinates(cap_, degree(n).basis, v));
  return out;
}

GradedPoly star_product(const ChernCalculus& chern, const GradedPoly& v_class, const GradedPoly& a,
                        const GradedPoly& b) {
  if (!chern.is_w_class(a) || !chern.is_w_class(b)) throw DomainError("star product needs classes in W");
  const int wa = a.is_zero() ? 0 : ChernCalculus::class_weight(a);
  const int wb = b.is_zero() ? 0 : ChernCalculus::class_weight(b);
  if (wa + wb > chern.cap()) throw RangeError("star product exceeds the cap");
  GradedPoly result = a * b;
  if (wa > 0 && wb > 0) result += v_class * chern.boundary(a) * chern.boundary(b) * Rational(2);
  if (!chern.is_w_class(result)) throw InvariantViolation("star product left W");
  return result;
}

}  // namespace cobord
