#include "cobord/series.hpp"

namespace cobord {

Series1 make_series(int cap, int order, const std::vector<GradedPoly>& coeffs) {
  Series1 s(cap, order);
  for (std::size_t k = 0; k < coeffs.size(); ++k) s.set({static_cast<int>(k)}, coeffs[k]);
  return s;
}

Series1 derivative(const Series1& s) {
  Series1 out(s.cap(), std::max(0, s.order() - 1));
  for (const auto& [idx, c] : s.terms())
    if (idx[0] >= 1) out.set({idx[0] - 1}, c * Rational(idx[0]));
  return out;
}

Series1 integral(const Series1& s) {
  Series1 out(s.cap(), s.order() + 1);
  for (const auto& [idx, c] : s.terms()) out.set({idx[0] + 1}, c * ratio(1, idx[0] + 1));
  return out;
}

Series1 reciprocal(const Series1& s) {
  const GradedPoly s0 = coeff(s, 0);
  if (!s0.is_constant() || s0.is_zero()) throw DomainError("reciprocal needs a nonzero rational constant term");
  const Rational inv0 = 1 / s0.constant_term();
  std::vector<GradedPoly> r;
  r.emplace_back(s.cap(), inv0);
  for (int n = 1; n <= s.order(); ++n) {
    GradedPoly acc(s.cap());
    for (int k = 1; k <= n; ++k) {
      const GradedPoly sk = coeff(s, k);
      if (!sk.is_zero()) acc += sk * r[n - k];
    }
    r.push_back(acc * (-inv0));
  }
  return make_series(s.cap(), s.order(), r);
}

Series1 series_exp(const Series1& s) {
  if (!coeff(s, 0).is_zero()) throw DomainError("exp needs a zero constant term");
  std::vector<GradedPoly> e;
  e.emplace_back(s.cap(), 1);
  for (int n = 1; n <= s.order(); ++n) {
    GradedPoly acc(s.cap());
    for (int k = 1; k <= n; ++k) {
      const GradedPoly sk = coeff(s, k);
      if (!sk.is_zero()) acc += sk * e[n - k] * Rational(k);
    }
    e.push_back(acc * ratio(1, n));
  }
  return make_series(s.cap(), s.order(), e);
}

Series1 divide_by_x_power(const Series1& s, int k) {
  Series1 out(s.cap(), std::max(0, s.order() - k));
  for (const auto& [idx, c] : s.terms()) {
    if (idx[0] < k) throw DomainError("series is not divisible by x^" + std::to_string(k));
    out.set({idx[0] - k}, c);
  }
  return out;
}

Series1 series_compose(const Series1& outer, const Series1& inner) {
  return compose_into<1>(outer, inner);
}

Series1 series_reversion(const Series1& s) {
  if (!coeff(s, 0).is_zero()) throw DomainError("reversion needs a zero constant term");
  const GradedPoly lin = coeff(s, 1);
  if (!(lin.is_constant() && lin.constant_term() == 1))
    throw DomainError("reversion needs linear coefficient 1");
  const int order = s.order();
  const Series1 x = Series1::coordinate(s.cap(), order, 0);
  const Series1 rest = s - x;
  Series1 g = x;
  // Each pass fixes at least one more coefficient.
  for (int pass = 0; pass < order; ++pass) {
    Series1 next = (x - series_compose(rest, g)).truncated(order);
    if (next == g) break;
    g = std::move(next);
  }
  return g;
}

BiSeries lift_x(const Series1& s) {
  BiSeries out(s.cap(), s.order());
  for (const auto& [idx, c] : s.terms()) out.set({idx[0], 0}, c);
  return out;
}

BiSeries lift_y(const Series1& s) {
  BiSeries out(s.cap(), s.order());
  for (const auto& [idx, c] : s.terms()) out.set({0, idx[0]}, c);
  return out;
}

namespace {

// Homogeneous part of degree m of a * (degree-k part of b).
void accumulate_product_part(BiSeries& acc, const BiSeries& a_part, const BiSeries& b, int b_degree) {
  for (const auto& [ia, ca] : a_part.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      if (ib[0] + ib[1] != b_degree) continue;
      acc.add_to({ia[0] + ib[0], ia[1] + ib[1]}, ca * cb);
    }
  }
}

}  // namespace

BiSeries biseries_divide(const BiSeries& num, const BiSeries& den) {
  const int cap = num.cap();
  if (den.cap() != cap) throw ConfigError("series cap mismatch");
  const int v = den.valuation();
  if (v > den.order()) throw DomainError("division by a zero series");
  const BiSeries lowest = den.homogeneous_part(v);

  // Lead term: highest power of x in the lowest form.
  BiSeries::Index lead{-1, 0};
  for (const auto& [idx, c] : lowest.terms())
    if (idx[0] > lead[0]) lead = idx;
  const GradedPoly lead_coeff = lowest.coefficient(lead);
  if (!lead_coeff.is_constant() || lead_coeff.is_zero())
    throw DomainError("leading coefficient of the divisor is not a rational unit");
  const Rational lead_inv = 1 / lead_coeff.constant_term();

  const int num_val = num.valuation();
  if (num_val > num.order()) return BiSeries(cap, std::max(0, num.order() - v));
  const int q_val = num_val - v;
  if (q_val < 0) throw NotDivisibleError(num_val, "numerator has terms below the divisor's valuation");
  const int q_order = std::min(num.order() - v, den.order() - 2 * v + num_val);
  if (q_order < 0) throw DomainError("insufficient precision for division");

  BiSeries q(cap, q_order);
  std::vector<BiSeries> q_parts;  // q_parts[k - q_val] = degree-k part of q
  for (int k = q_val; k <= q_order; ++k) {
    const int m = k + v;
    BiSeries r = num.homogeneous_part(m).truncated(m);
    BiSeries sub(cap, m);
    for (int j = q_val; j < k; ++j) accumulate_product_part(sub, q_parts[j - q_val], den, m - j);
    r -= sub;
    BiSeries qk(cap, m);
    while (!r.is_zero()) {
      // Term of r with the highest power of x.
      BiSeries::Index top{-1, 0};
      for (const auto& [idx, c] : r.terms())
        if (idx[0] > top[0]) top = idx;
      const int dx = top[0] - lead[0];
      const int dy = top[1] - lead[1];
      if (dx < 0 || dy < 0) throw NotDivisibleError(m, "nonzero remainder at total degree " + std::to_string(m));
      const GradedPoly t = r.coefficient(top) * lead_inv;
      qk.add_to({dx, dy}, t);
      for (const auto& [idx, c] : lowest.terms()) r.add_to({idx[0] + dx, idx[1] + dy}, -(c * t));
      if (!r.coefficient(top).is_zero()) throw InvariantViolation("long division failed to cancel the lead term");
    }
    for (const auto& [idx, c] : qk.terms()) q.set(idx, c);
    q_parts.push_back(std::move(qk));
  }
  return q;
}

}  // namespace cobord
