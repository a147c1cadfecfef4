#include "cobord/graded_poly.hpp"

#include <algorithm>

#include "cobord/error.hpp"
#include "cobord/partitions.hpp"

namespace cobord {

Monomial Monomial::variable(int index, int power) {
  if (index < 1 || index > kMaxCap) throw RangeError("variable index out of range");
  if (power < 0 || power > 255) throw RangeError("exponent out of range");
  Monomial m;
  m.exp_[index] = static_cast<std::uint8_t>(power);
  return m;
}

Monomial Monomial::from_parts(std::span<const int> parts) {
  Monomial m;
  for (int p : parts) {
    if (p < 1 || p > kMaxCap) throw RangeError("partition part out of range");
    ++m.exp_[p];
  }
  return m;
}

int Monomial::exponent(int index) const {
  if (index < 1 || index > kMaxCap) return 0;
  return exp_[index];
}

int Monomial::weight() const {
  int w = 0;
  for (int i = 1; i <= kMaxCap; ++i) w += i * exp_[i];
  return w;
}

bool Monomial::is_one() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::uint8_t e) { return e == 0; });
}

std::vector<int> Monomial::parts() const {
  std::vector<int> out;
  for (int i = kMaxCap; i >= 1; --i) out.insert(out.end(), exp_[i], i);
  return out;
}

int Monomial::max_index() const {
  for (int i = kMaxCap; i >= 1; --i)
    if (exp_[i] != 0) return i;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int i = 0; i <= kMaxCap; ++i) {
    const int e = exp_[i] + other.exp_[i];
    if (e > 255) throw RangeError("exponent overflow");
    m.exp_[i] = static_cast<std::uint8_t>(e);
  }
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  const int wa = a.weight();
  const int wb = b.weight();
  if (wa != wb) return wa < wb;
  for (int i = 1; i <= kMaxCap; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  }
  return false;
}

GradedPoly::GradedPoly(int cap) : cap_(cap) {
  if (cap < 0 || cap > kMaxCap) throw ConfigError("cap must lie in [0, " + std::to_string(kMaxCap) + "]");
}

GradedPoly::GradedPoly(int cap, const Rational& constant) : GradedPoly(cap) {
  add_term(Monomial{}, constant);
}

GradedPoly GradedPoly::variable(int cap, int index) {
  return monomial(cap, Monomial::variable(index));
}

GradedPoly GradedPoly::monomial(int cap, const Monomial& m, const Rational& coeff) {
  GradedPoly p(cap);
  p.add_term(m, coeff);
  return p;
}

Rational GradedPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational GradedPoly::constant_term() const { return coefficient(Monomial{}); }

bool GradedPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::optional<int> GradedPoly::homogeneous_weight() const {
  if (terms_.empty()) return std::nullopt;
  const int w = terms_.begin()->first.weight();
  if (terms_.rbegin()->first.weight() != w) return std::nullopt;
  return w;
}

bool GradedPoly::is_homogeneous(int weight) const {
  if (terms_.empty()) return true;
  auto w = homogeneous_weight();
  return w && *w == weight;
}

GradedPoly GradedPoly::homogeneous_part(int weight) const {
  GradedPoly out(cap_);
  for (const auto& [m, c] : terms_)
    if (m.weight() == weight) out.terms_.emplace_hint(out.terms_.end(), m, c);
  return out;
}

int GradedPoly::max_weight() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.weight();
}

int GradedPoly::max_index() const {
  int idx = 0;
  for (const auto& [m, c] : terms_) idx = std::max(idx, m.max_index());
  return idx;
}

void GradedPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff == 0 || m.weight() > cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void GradedPoly::require_same_cap(const GradedPoly& other) const {
  if (cap_ != other.cap_) {
    throw ConfigError("cap mismatch: " + std::to_string(cap_) + " vs " + std::to_string(other.cap_));
  }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& other) {
  require_same_cap(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& other) {
  require_same_cap(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

GradedPoly& GradedPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  a.require_same_cap(b);
  GradedPoly out(a.cap_);
  if (a.is_zero() || b.is_zero()) return out;
  const int wb_min = b.terms_.begin()->first.weight();
  for (const auto& [ma, ca] : a.terms_) {
    const int wa = ma.weight();
    if (wa + wb_min > a.cap_) break;
    for (const auto& [mb, cb] : b.terms_) {
      if (wa + mb.weight() > a.cap_) break;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return a.cap_ == b.cap_ && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative exponent");
  GradedPoly result(cap_, 1);
  GradedPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string GradedPoly::to_string(std::string_view symbol) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    const bool negative = c < 0;
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string factors;
    for (int i = 1; i <= kMaxCap; ++i) {
      const int e = m.exponent(i);
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += std::string(symbol) + std::to_string(i);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += cobord::to_string(mag);
    } else if (mag == 1) {
      out += factors;
    } else {
      out += cobord::to_string(mag) + "*" + factors;
    }
  }
  return out;
}

std::vector<Monomial> monomial_basis(int n) {
  std::vector<Monomial> basis;
  for (const auto& p : partitions(n)) basis.push_back(Monomial::from_parts(p));
  std::sort(basis.begin(), basis.end(), MonomialOrder{});
  return basis;
}

std::vector<Rational> coordinates(const GradedPoly& p, std::span<const Monomial> basis) {
  std::vector<Rational> v;
  v.reserve(basis.size());
  for (const auto& m : basis) v.push_back(p.coefficient(m));
  return v;
}

GradedPoly from_coordinates(int cap, std::span<const Monomial> basis,
                            std::span<const Rational> coords) {
  GradedPoly p(cap);
  for (std::size_t i = 0; i < basis.size() && i < coords.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

}  // namespace cobord
