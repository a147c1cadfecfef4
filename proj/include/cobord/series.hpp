#pragma once

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>

#include "cobord/error.hpp"
#include "cobord/graded_poly.hpp"

namespace cobord {

/// Power series in N variables with GradedPoly coefficients, known through
/// total degree `order()`. Coefficients beyond the order are unknown, not
/// zero; arithmetic propagates the order the way truncated series do.
template <std::size_t N>
class PowerSeries {
 public:
  using Index = std::array<int, N>;

  PowerSeries() : PowerSeries(0, 0) {}
  PowerSeries(int cap, int order) : cap_(cap), order_(order) {
    if (order < 0) throw ConfigError("series order must be non-negative");
  }

  int cap() const { return cap_; }
  int order() const { return order_; }
  const std::map<Index, GradedPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  static int total_degree(const Index& idx) { return std::accumulate(idx.begin(), idx.end(), 0); }

  GradedPoly coefficient(const Index& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? GradedPoly(cap_) : it->second;
  }

  void set(const Index& idx, GradedPoly value) {
    check_index(idx);
    if (value.cap() != cap_) throw ConfigError("coefficient cap mismatch");
    if (total_degree(idx) > order_) return;
    if (value.is_zero()) {
      terms_.erase(idx);
    } else {
      terms_.insert_or_assign(idx, std::move(value));
    }
  }

  void add_to(const Index& idx, const GradedPoly& value) {
    if (value.is_zero() || total_degree(idx) > order_) return;
    check_index(idx);
    auto [it, inserted] = terms_.try_emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  /// Lowest total degree with a nonzero coefficient; order()+1 when every
  /// known coefficient vanishes.
  int valuation() const {
    int v = order_ + 1;
    for (const auto& [idx, c] : terms_) v = std::min(v, total_degree(idx));
    return v;
  }

  PowerSeries truncated(int order) const {
    PowerSeries out(cap_, std::min(order, order_));
    for (const auto& [idx, c] : terms_)
      if (total_degree(idx) <= out.order_) out.terms_.emplace(idx, c);
    return out;
  }

  /// Terms of exactly this total degree.
  PowerSeries homogeneous_part(int degree) const {
    PowerSeries out(cap_, order_);
    for (const auto& [idx, c] : terms_)
      if (total_degree(idx) == degree) out.terms_.emplace(idx, c);
    return out;
  }

  PowerSeries& operator+=(const PowerSeries& other) {
    require_same_cap(other);
    order_ = std::min(order_, other.order_);
    prune();
    for (const auto& [idx, c] : other.terms_) add_to(idx, c);
    return *this;
  }

  PowerSeries& operator-=(const PowerSeries& other) {
    require_same_cap(other);
    order_ = std::min(order_, other.order_);
    prune();
    for (const auto& [idx, c] : other.terms_) add_to(idx, -c);
    return *this;
  }

  PowerSeries operator-() const {
    PowerSeries out(*this);
    for (auto& [idx, c] : out.terms_) c = -c;
    return out;
  }

  PowerSeries& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [idx, c] : terms_) c *= s;
    return *this;
  }

  /// Coefficient-wise multiplication by a ring element.
  PowerSeries scaled(const GradedPoly& s) const {
    PowerSeries out(cap_, order_);
    for (const auto& [idx, c] : terms_) out.add_to(idx, c * s);
    return out;
  }

  /// Multiplication by the monomial x_1^{shift[0]} ... x_N^{shift[N-1]}.
  PowerSeries shifted(const Index& shift) const {
    const int d = total_degree(shift);
    PowerSeries out(cap_, order_ + d);
    for (const auto& [idx, c] : terms_) {
      Index j;
      for (std::size_t k = 0; k < N; ++k) j[k] = idx[k] + shift[k];
      out.terms_.emplace(j, c);
    }
    return out;
  }

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(PowerSeries a, const Rational& s) { return a *= s; }
  friend PowerSeries operator*(const Rational& s, PowerSeries a) { return a *= s; }

  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    a.require_same_cap(b);
    const int order = std::min(a.order_ + b.valuation(), b.order_ + a.valuation());
    PowerSeries out(a.cap_, order);
    for (const auto& [ia, ca] : a.terms_) {
      const int da = total_degree(ia);
      for (const auto& [ib, cb] : b.terms_) {
        if (da + total_degree(ib) > order) continue;
        Index j;
        for (std::size_t k = 0; k < N; ++k) j[k] = ia[k] + ib[k];
        out.add_to(j, ca * cb);
      }
    }
    return out;
  }

  /// Equality of the coefficients both series know.
  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.cap_ == b.cap_ && a.agrees_through(b, std::min(a.order_, b.order_));
  }

  bool agrees_through(const PowerSeries& other, int degree) const {
    return first_difference(other, degree).has_value() == false;
  }

  /// First index (by total degree, then index order) where the two series
  /// differ among degrees <= `degree`.
  std::optional<Index> first_difference(const PowerSeries& other, int degree) const {
    std::optional<Index> best;
    auto consider = [&](const Index& idx) {
      if (total_degree(idx) > degree) return;
      if (coefficient(idx) == other.coefficient(idx)) return;
      if (!best || less_graded(idx, *best)) best = idx;
    };
    for (const auto& [idx, c] : terms_) consider(idx);
    for (const auto& [idx, c] : other.terms_) consider(idx);
    return best;
  }

  static bool less_graded(const Index& a, const Index& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }

  /// Constant series with the given value, known to the given order.
  static PowerSeries constant(const GradedPoly& value, int order) {
    PowerSeries out(value.cap(), order);
    out.set(Index{}, value);
    return out;
  }

  /// The coordinate function x_k (0-based).
  static PowerSeries coordinate(int cap, int order, std::size_t k) {
    PowerSeries out(cap, order);
    Index idx{};
    idx[k] = 1;
    out.set(idx, GradedPoly(cap, 1));
    return out;
  }

 private:
  void check_index(const Index& idx) const {
    for (int e : idx)
      if (e < 0) throw RangeError("negative series index");
  }
  void require_same_cap(const PowerSeries& other) const {
    if (cap_ != other.cap_) throw ConfigError("series cap mismatch");
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (total_degree(it->first) > order_) {
        it = terms_.erase(it);
      } else {
        ++it;
      }
    }
  }

  int cap_;
  int order_;
  std::map<Index, GradedPoly> terms_;
};

using Series1 = PowerSeries<1>;
using BiSeries = PowerSeries<2>;
using TriSeries = PowerSeries<3>;

// ---- univariate helpers ---------------------------------------------------

/// Coefficient of x^k; zero when absent.
inline GradedPoly coeff(const Series1& s, int k) { return s.coefficient({k}); }

/// s = Σ coeffs[k] x^k, known through x^{order}.
Series1 make_series(int cap, int order, const std::vector<GradedPoly>& coeffs);

Series1 derivative(const Series1& s);
/// Antiderivative with zero constant term.
Series1 integral(const Series1& s);
/// Multiplicative inverse; the constant term must be a nonzero rational.
Series1 reciprocal(const Series1& s);
/// exp(s) for s with zero constant term.
Series1 series_exp(const Series1& s);
/// s(x) / x^k; the low coefficients must vanish.
Series1 divide_by_x_power(const Series1& s, int k);

/// outer(inner(x)). Inner must have zero constant term.
Series1 series_compose(const Series1& outer, const Series1& inner);
/// Compositional inverse of s = x + O(x^2).
Series1 series_reversion(const Series1& s);

/// outer evaluated at a multivariate series with zero constant term.
template <std::size_t N>
PowerSeries<N> compose_into(const Series1& outer, const PowerSeries<N>& inner) {
  if (!inner.coefficient({}).is_zero()) throw DomainError("inner series has a nonzero constant term");
  const int val = inner.valuation();
  long long limit = static_cast<long long>(outer.order() + 1) * val - 1;
  const int order = static_cast<int>(std::min<long long>(inner.order(), std::min<long long>(limit, INT_MAX / 2)));
  PowerSeries<N> result(inner.cap(), order);
  PowerSeries<N> power = PowerSeries<N>::constant(GradedPoly(inner.cap(), 1), order);
  for (int k = 0; k <= outer.order(); ++k) {
    if (k > 0) {
      if (static_cast<long long>(k) * val > order) break;
      power = (power * inner).truncated(order);
    }
    const GradedPoly c = coeff(outer, k);
    if (!c.is_zero()) result += power.scaled(c);
  }
  return result.truncated(order);
}

// ---- bivariate helpers ----------------------------------------------------

/// s(x) as a bivariate series.
BiSeries lift_x(const Series1& s);
/// s(y) as a bivariate series.
BiSeries lift_y(const Series1& s);

/// Exact quotient num / den. The lowest-degree homogeneous form of `den`
/// must have a rational unit as the coefficient of its highest power of x;
/// factors such as (x - y) are handled by homogeneous long division.
/// Throws NotDivisibleError at the first total degree with a remainder.
BiSeries biseries_divide(const BiSeries& num, const BiSeries& den);

/// Σ F_ij u^i v^j for series u, v in N variables with zero constant terms.
template <std::size_t N>
PowerSeries<N> substitute(const BiSeries& f, const PowerSeries<N>& u, const PowerSeries<N>& v) {
  if (!u.coefficient({}).is_zero() || !v.coefficient({}).is_zero())
    throw DomainError("substituted series must have zero constant terms");
  const int val = std::min(u.valuation(), v.valuation());
  const long long limit = static_cast<long long>(f.order() + 1) * val - 1;
  const int order = static_cast<int>(std::min<long long>({limit, u.order(), v.order()}));
  const int cap = f.cap();
  std::vector<PowerSeries<N>> upow;
  upow.push_back(PowerSeries<N>::constant(GradedPoly(cap, 1), order));
  for (int i = 1; i <= f.order(); ++i) upow.push_back((upow.back() * u).truncated(order));
  PowerSeries<N> result(cap, order);
  PowerSeries<N> vpow = PowerSeries<N>::constant(GradedPoly(cap, 1), order);
  for (int j = 0; j <= f.order(); ++j) {
    if (j > 0) vpow = (vpow * v).truncated(order);
    PowerSeries<N> inner(cap, order);
    bool any = false;
    for (int i = 0; i + j <= f.order(); ++i) {
      const GradedPoly c = f.coefficient({i, j});
      if (c.is_zero()) continue;
      inner += upow[i].scaled(c);
      any = true;
    }
    if (any) result += (inner * vpow).truncated(order);
  }
  return result.truncated(order);
}

}  // namespace cobord
