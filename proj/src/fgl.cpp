#include "cobord/fgl.hpp"

#include "cobord/error.hpp"

namespace cobord {

Substitution::Substitution(int cap, std::string target_symbol)
    : cap_(cap), target_symbol_(std::move(target_symbol)), assigned_(static_cast<std::size_t>(cap), false) {
  for (int n = 1; n <= cap; ++n) images_.push_back(GradedPoly::variable(cap, n));
}

void Substitution::assign(int n, GradedPoly image) {
  if (n < 1 || n > cap_) throw RangeError("substitution index out of range");
  if (image.cap() != cap_) throw ConfigError("substitution image cap mismatch");
  if (!image.is_homogeneous(n))
    throw DomainError("image of P" + std::to_string(n) + " is not homogeneous of weight " + std::to_string(n));
  images_[n - 1] = std::move(image);
  assigned_[n - 1] = true;
}

const GradedPoly& Substitution::image(int n) const {
  if (n < 1 || n > cap_) throw RangeError("substitution index out of range");
  return images_[n - 1];
}

bool Substitution::is_assigned(int n) const { return n >= 1 && n <= cap_ && assigned_[n - 1]; }

GradedPoly Substitution::apply(const GradedPoly& p) const {
  if (p.cap() != cap_) throw ConfigError("substitution cap mismatch");
  GradedPoly out(cap_);
  std::vector<std::vector<GradedPoly>> powers(static_cast<std::size_t>(cap_) + 1);
  for (const auto& [m, c] : p.terms()) {
    GradedPoly term(cap_, c);
    for (int n = 1; n <= cap_ && !term.is_zero(); ++n) {
      const int e = m.exponent(n);
      if (e == 0) continue;
      auto& pw = powers[n];
      if (pw.empty()) pw.emplace_back(cap_, 1);
      while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images_[n - 1]);
      term = term * pw[e];
    }
    out += term;
  }
  return out;
}

Substitution Substitution::then(const Substitution& next) const {
  if (next.cap_ != cap_) throw ConfigError("substitution cap mismatch");
  Substitution out(cap_, next.target_symbol_);
  for (int n = 1; n <= cap_; ++n) {
    out.images_[n - 1] = next.apply(images_[n - 1]);
    out.assigned_[n - 1] = assigned_[n - 1] || next.assigned_[n - 1];
  }
  return out;
}

std::string to_string(FglOrigin origin) {
  switch (origin) {
    case FglOrigin::universal: return "universal";
    case FglOrigin::abel: return "abel";
    case FglOrigin::buchstaber: return "buchstaber";
    case FglOrigin::hoehn: return "hoehn";
    case FglOrigin::custom: return "custom";
  }
  return "custom";
}

Series1 invariant_form(const BiSeries& f) {
  Series1 w(f.cap(), std::max(0, f.order() - 1));
  for (const auto& [idx, c] : f.terms())
    if (idx[1] == 1) w.set({idx[0]}, c);
  return w;
}

Series1 beta_of(const Series1& w) {
  Series1 b(w.cap(), std::max(0, w.order() - 2));
  for (const auto& [idx, c] : w.terms()) {
    const int k = idx[0] - 2;
    if (k >= 0) b.set({k}, c * ratio(idx[0], 2));
  }
  return b;
}

std::optional<std::string> fgl_axiom_failure(const BiSeries& f, bool check_associativity) {
  const int cap = f.cap();
  for (int i = 0; i <= f.order(); ++i) {
    const GradedPoly expected(cap, i == 1 ? 1 : 0);
    if (f.coefficient({i, 0}) != expected) return "unit axiom fails at x^" + std::to_string(i);
  }
  for (const auto& [idx, c] : f.terms()) {
    if (f.coefficient({idx[1], idx[0]}) != c)
      return "symmetry fails at x^" + std::to_string(idx[0]) + " y^" + std::to_string(idx[1]);
    if (!c.is_homogeneous(idx[0] + idx[1] - 1))
      return "coefficient of x^" + std::to_string(idx[0]) + " y^" + std::to_string(idx[1]) +
             " is not homogeneous of weight " + std::to_string(idx[0] + idx[1] - 1);
  }
  if (check_associativity) {
    const int order = f.order();
    const TriSeries x = TriSeries::coordinate(cap, order, 0);
    const TriSeries y = TriSeries::coordinate(cap, order, 1);
    const TriSeries z = TriSeries::coordinate(cap, order, 2);
    const TriSeries left = substitute<3>(f, substitute<3>(f, x, y), z);
    const TriSeries right = substitute<3>(f, x, substitute<3>(f, y, z));
    if (auto diff = left.first_difference(right, std::min(left.order(), right.order()))) {
      return "associativity fails at total degree " + std::to_string(TriSeries::total_degree(*diff));
    }
  }
  return std::nullopt;
}

FormalGroupLaw::FormalGroupLaw(BiSeries f, FglOrigin origin, std::optional<Series1> logarithm,
                               std::string ring_symbol, bool check_associativity)
    : f_(std::move(f)),
      origin_(origin),
      log_(std::move(logarithm)),
      ring_symbol_(std::move(ring_symbol)),
      w_(invariant_form(f_)),
      beta_(beta_of(w_)) {
  if (auto failure = fgl_axiom_failure(f_, check_associativity)) {
    throw InvariantViolation(to_string(origin_) + " formal group law: " + *failure);
  }
}

GradedPoly FormalGroupLaw::alpha(int i, int j) const {
  if (i < 0 || j < 0 || i + j > f_.order())
    throw RangeError("alpha(" + std::to_string(i) + "," + std::to_string(j) + ") lies outside the cap");
  return f_.coefficient({i, j});
}

Series1 FormalGroupLaw::log_series() const {
  if (log_) return *log_;
  return integral(reciprocal(w_));
}

Series1 FormalGroupLaw::exponent() const { return series_reversion(log_series()); }

Series1 FormalGroupLaw::formal_inverse() const {
  // ι = -x - Σ_{i+j>=2} α_ij x^i ι^j, iterated to a fixed point.
  const int cap = f_.cap();
  const int order = f_.order();
  const Series1 x = Series1::coordinate(cap, order, 0);
  BiSeries higher = f_;
  higher.set({1, 0}, GradedPoly(cap));
  higher.set({0, 1}, GradedPoly(cap));
  Series1 inv = -x;
  for (int pass = 0; pass <= order; ++pass) {
    Series1 next = (-x - substitute<1>(higher, x, inv)).truncated(order);
    if (next == inv) break;
    inv = std::move(next);
  }
  return inv;
}

Series1 mishchenko_log(int cap) {
  if (cap < 1) throw ConfigError("cap must be at least 1");
  Series1 log(cap, cap + 1);
  log.set({1}, GradedPoly(cap, 1));
  for (int n = 1; n <= cap; ++n) log.set({n + 1}, GradedPoly::variable(cap, n) * ratio(1, n + 1));
  return log;
}

FormalGroupLaw fgl_from_logarithm(const Series1& log, FglOrigin origin, std::string ring_symbol) {
  const Series1 exp = series_reversion(log);
  const BiSeries sum = lift_x(log) + lift_y(log);
  BiSeries f = compose_into<2>(exp, sum);
  return FormalGroupLaw(std::move(f), origin, log, std::move(ring_symbol));
}

FormalGroupLaw universal_fgl(int cap) { return fgl_from_logarithm(mishchenko_log(cap), FglOrigin::universal); }

FormalGroupLaw additive_fgl(int cap) {
  BiSeries f(cap, cap + 1);
  f.set({1, 0}, GradedPoly(cap, 1));
  f.set({0, 1}, GradedPoly(cap, 1));
  Series1 log(cap, cap + 1);
  log.set({1}, GradedPoly(cap, 1));
  return FormalGroupLaw(std::move(f), FglOrigin::custom, log);
}

FormalGroupLaw specialize_fgl(const FormalGroupLaw& f, const Substitution& sub, FglOrigin origin) {
  BiSeries image(f.cap(), f.series().order());
  for (const auto& [idx, c] : f.series().terms()) image.set(idx, sub.apply(c));
  std::optional<Series1> log;
  if (f.logarithm()) {
    Series1 l(f.cap(), f.logarithm()->order());
    for (const auto& [idx, c] : f.logarithm()->terms()) l.set(idx, sub.apply(c));
    log = std::move(l);
  }
  return FormalGroupLaw(std::move(image), origin, std::move(log), sub.target_symbol());
}

}  // namespace cobord
