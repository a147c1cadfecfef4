#include "cobord/specializations.hpp"

#include <functional>

#include "cobord/error.hpp"

namespace cobord {

namespace {

using Entry = std::pair<std::pair<int, int>, GradedPoly>;
using EntryFn = std::function<std::vector<Entry>(int n)>;

std::string index_text(const std::pair<int, int>& ij) {
  return "(" + std::to_string(ij.first) + "," + std::to_string(ij.second) + ")";
}

// Degree by degree: the first entry (lexicographic) whose image still involves
// P_n determines P_n; every entry of that weight must then vanish.
Elimination eliminate(int cap, int free_count, const EntryFn& entries_of) {
  Elimination e{Substitution(cap, "P"), free_count, {}};
  for (int n = free_count + 1; n <= cap; ++n) {
    const auto entries = entries_of(n);
    const Monomial pn = Monomial::variable(n);
    std::optional<std::size_t> pivot;
    GradedPoly pivot_image(cap);
    for (std::size_t k = 0; k < entries.size() && !pivot; ++k) {
      GradedPoly img = e.substitution.apply(entries[k].second);
      if (img.coefficient(pn) != 0) {
        pivot = k;
        pivot_image = std::move(img);
      }
    }
    if (!pivot) throw ConstructionFailed("elimination blocked at degree " + std::to_string(n));
    const Rational c = pivot_image.coefficient(pn);
    GradedPoly rest = pivot_image - GradedPoly::monomial(cap, pn, c);
    GradedPoly image = rest * Rational(-1 / c);
    e.substitution.assign(n, image);
    EliminationStep step{n, entries[*pivot].first, c, image, 0};
    for (const auto& [ij, g] : entries) {
      if (!e.substitution.apply(g).is_zero())
        throw ConstructionFailed("over-determined inconsistency at degree " + std::to_string(n) + ", entry " +
                                 index_text(ij));
      if (ij != step.pivot) ++step.entries_checked;
    }
    e.steps.push_back(std::move(step));
  }
  return e;
}

BiSeries x_times(const Series1& s, bool in_x) {
  // x s(y) when in_x, y s(x) otherwise.
  return in_x ? lift_y(s).shifted({1, 0}) : lift_x(s).shifted({0, 1});
}

}  // namespace

Elimination abel_eliminate(const FormalGroupLaw& u) {
  const int cap = u.cap();
  if (cap < 3) throw RangeError("Abel elimination needs cap >= 3");
  return eliminate(cap, 2, [&](int n) {
    std::vector<Entry> out;
    for (int i = 2; i <= n - 1; ++i) out.emplace_back(std::pair{i, n + 1 - i}, u.alpha(i, n + 1 - i));
    return out;
  });
}

IdealSpec abel_ideal(const FormalGroupLaw& u) {
  std::vector<GradedPoly> gens;
  for (int i = 2; i <= u.cap(); ++i)
    for (int j = i; i + j - 1 <= u.cap(); ++j) gens.push_back(u.alpha(i, j));
  return IdealSpec("I_Ab", std::move(gens), u.cap());
}

bool has_abel_shape(const FormalGroupLaw& f) {
  for (const auto& [idx, c] : f.series().terms())
    if (idx[0] >= 2 && idx[1] >= 2) return false;
  return true;
}

BiSeries buchstaber_series(const FormalGroupLaw& f) {
  const BiSeries d = x_times(f.w(), true) - x_times(f.w(), false);
  return f.series() * d;
}

bool BuchstaberData::antisymmetric() const {
  for (const auto& [ij, c] : entries) {
    auto it = entries.find({ij.second, ij.first});
    const GradedPoly other = it == entries.end() ? GradedPoly(c.cap()) : it->second;
    if (!(c + other).is_zero()) return false;
  }
  return true;
}

BuchstaberData buchstaber_eliminate(const FormalGroupLaw& u) {
  const int cap = u.cap();
  if (cap < 5) throw RangeError("Buchstaber elimination needs cap >= 5");
  BuchstaberData data{buchstaber_series(u), {}, Elimination{Substitution(cap), 4, {}}};
  for (int i = 0; i <= data.a.order(); ++i)
    for (int j = 0; i + j <= data.a.order(); ++j)
      if (i + j >= 2) data.entries.emplace(std::pair{i, j}, data.a.coefficient({i, j}));
  data.elimination = eliminate(cap, 4, [&](int n) {
    std::vector<Entry> out;
    for (int i = 3; i <= n - 1; ++i) out.emplace_back(std::pair{i, n + 2 - i}, data.entries.at({i, n + 2 - i}));
    return out;
  });
  return data;
}

IdealSpec buchstaber_ideal(const BuchstaberData& data, int cap) {
  std::vector<GradedPoly> gens;
  for (const auto& [ij, c] : data.entries) {
    const auto [i, j] = ij;
    if (i >= 3 && j > i && i + j - 2 <= cap && !c.is_zero()) gens.push_back(c);
  }
  return IdealSpec("I_B", std::move(gens), cap);
}

KricheverReport krichever_form_check(const FormalGroupLaw& f) {
  KricheverReport report;
  const int cap = f.cap();
  const Series1& w = f.w();
  const GradedPoly w1 = coeff(w, 1);
  BiSeries base = x_times(w, true) + x_times(w, false);
  BiSeries xy(cap, base.order());
  xy.set({1, 1}, w1);
  const BiSeries n = f.series() - (base - xy);

  auto fail = [&](std::string stage, int weight, std::pair<int, int> ij, GradedPoly residual) {
    report.pass = false;
    report.stage = std::move(stage);
    report.failing_degree = weight;
    report.index = ij;
    report.residual = std::move(residual);
  };

  std::optional<BiSeries::Index> first;
  for (const auto& [idx, c] : n.terms())
    if ((idx[0] < 2 || idx[1] < 2) && (!first || BiSeries::less_graded(idx, *first))) first = idx;
  if (first) {
    fail("divisibility", (*first)[0] + (*first)[1] - 1, {(*first)[0], (*first)[1]}, n.coefficient(*first));
    return report;
  }
  if (n.order() < 4) return report;

  BiSeries q(cap, n.order() - 4);
  for (const auto& [idx, c] : n.terms()) q.set({idx[0] - 2, idx[1] - 2}, c);
  const BiSeries lhs = q * (x_times(w, true) - x_times(w, false));
  const Series1 wb = w * f.beta();
  const BiSeries rhs = lift_x(wb) - lift_y(wb);
  const int through = std::min(lhs.order(), rhs.order());
  if (auto d = lhs.first_difference(rhs, through)) {
    fail("functional", (*d)[0] + (*d)[1] + 2, {(*d)[0], (*d)[1]}, lhs.coefficient(*d) - rhs.coefficient(*d));
  }
  return report;
}

Series1 hoehn_residual(const Series1& u, const std::array<GradedPoly, 4>& p) {
  const Series1 t = derivative(u).shifted({1}) - u;
  const Series1 u2 = u * u;
  const Series1 u3 = u2 * u;
  const Series1 u4 = u2 * u2;
  Series1 e = t * t - u4;
  e -= u3.scaled(p[0]).shifted({1});
  e -= u2.scaled(p[1]).shifted({2});
  e -= u.scaled(p[2]).shifted({3});
  e -= Series1::constant(p[3], u.order()).shifted({4});
  return e.truncated(u.order());
}

HoehnGenus hoehn_solve(const std::array<GradedPoly, 4>& p, int cap, std::string symbol) {
  const int ring_cap = p[0].cap();
  if (cap < 1 || cap > ring_cap) throw ConfigError("Höhn solver cap must lie in 1..ring cap");
  for (int i = 0; i < 4; ++i) {
    if (p[i].cap() != ring_cap) throw ConfigError("parameter ring caps differ");
    if (!p[i].is_homogeneous(i + 1))
      throw DomainError("p" + std::to_string(i + 1) + " must be homogeneous of weight " + std::to_string(i + 1));
  }
  // u = x h = 1 + Σ c_k x^{k+1}; the x^{k+1} coefficient of the residual is
  // -(2k + 4) c_k plus terms in c_0..c_{k-1}.
  Series1 u = Series1::constant(GradedPoly(ring_cap, 1), cap);
  for (int k = 0; k + 1 <= cap; ++k) {
    const GradedPoly e = coeff(hoehn_residual(u, p), k + 1);
    u.set({k + 1}, e * ratio(1, 2 * k + 4));
  }
  HoehnGenus g;
  g.cap = cap;
  g.p = p;
  g.symbol = std::move(symbol);
  g.residual_zero = hoehn_residual(u, p).is_zero();
  g.h_regular = divide_by_x_power(u - Series1::constant(GradedPoly(ring_cap, 1), cap), 1);
  g.f = series_exp(integral(g.h_regular)).shifted({1});
  const Series1 log = series_reversion(g.f);
  for (int n = 1; n <= cap; ++n) g.images.push_back(coeff(log, n + 1) * Rational(n + 1));
  return g;
}

HoehnGenus hoehn_solve(const std::array<Rational, 4>& q, int cap) {
  std::array<GradedPoly, 4> p{GradedPoly(cap), GradedPoly(cap), GradedPoly(cap), GradedPoly(cap)};
  const GradedPoly t = GradedPoly::variable(cap, 1);
  for (int i = 0; i < 4; ++i)
    if (i + 1 <= cap) p[i] = t.pow(i + 1) * q[i];
  HoehnGenus g = hoehn_solve(p, cap, "t");
  g.graded_rational = true;
  return g;
}

HoehnGenus hoehn_solve_generic(int cap) {
  std::array<GradedPoly, 4> p{GradedPoly(cap), GradedPoly(cap), GradedPoly(cap), GradedPoly(cap)};
  for (int i = 0; i < 4; ++i)
    if (i + 1 <= cap) p[i] = GradedPoly::variable(cap, i + 1);
  return hoehn_solve(p, cap, "p");
}

std::vector<Rational> HoehnGenus::rational_images() const {
  if (!graded_rational) throw DomainError("images are not rational");
  std::vector<Rational> out;
  for (std::size_t n = 1; n <= images.size(); ++n)
    out.push_back(images[n - 1].coefficient(Monomial::variable(1, static_cast<int>(n))));
  return out;
}

std::array<Rational, 4> HoehnGenus::rational_p() const {
  if (!graded_rational) throw DomainError("parameters are not rational");
  std::array<Rational, 4> out;
  for (int i = 0; i < 4; ++i) out[i] = p[i].coefficient(Monomial::variable(1, i + 1));
  return out;
}

FormalGroupLaw HoehnGenus::law() const { return fgl_from_logarithm(series_reversion(f), FglOrigin::hoehn, symbol); }

KricheverParams krichever_params_of(const FormalGroupLaw& f) {
  const int cap = f.cap();
  const GradedPoly one(cap, 1);
  const Series1 uf = divide_by_x_power(f.exponent(), 1);
  const Series1 u = Series1::constant(one, uf.order()) + (derivative(uf).shifted({1}) * reciprocal(uf));

  KricheverParams out;
  out.p = {GradedPoly(cap), GradedPoly(cap), GradedPoly(cap), GradedPoly(cap)};
  for (int i = 0; i < 4 && i + 1 <= u.order(); ++i) out.p[i] = coeff(hoehn_residual(u, out.p), i + 1);
  const Series1 e = hoehn_residual(u, out.p);
  for (int m = 1; m <= e.order(); ++m) {
    const GradedPoly r = coeff(e, m);
    if (!r.is_zero()) {
      out.failing_order = m;
      out.residual = r;
      return out;
    }
  }
  out.success = true;
  return out;
}

PhiW::PhiW(const ChernCalculus& chern, GradedPoly v_class, std::map<int, GradedPoly> generators)
    : chern_(chern), v_(std::move(v_class)), gens_(std::move(generators)) {
  for (int n = 0; n <= cap(); ++n) {
    std::vector<Partition> labels;
    std::vector<GradedPoly> monomials;
    for (const auto& part : partitions(n)) {
      if (std::find(part.begin(), part.end(), 2) != part.end()) continue;
      GradedPoly m(cap(), 1);
      for (int k : part) {
        auto it = gens_.find(k);
        if (it == gens_.end()) throw ConfigError("missing W-generator x" + std::to_string(k));
        m = star(m, it->second);
      }
      labels.push_back(part);
      monomials.push_back(std::move(m));
    }
    labels_.push_back(std::move(labels));
    monomials_.push_back(std::move(monomials));
  }
}

const std::vector<Partition>& PhiW::monomial_labels(int n) const { return labels_.at(n); }

const std::vector<GradedPoly>& PhiW::star_monomials(int n) const { return monomials_.at(n); }

GradedPoly PhiW::star(const GradedPoly& a, const GradedPoly& b) const { return star_product(chern_, v_, a, b); }

std::size_t PhiW::span_rank(int n) const {
  const auto basis = monomial_basis(n);
  std::vector<Vector> rows;
  for (const auto& m : star_monomials(n)) rows.push_back(coordinates(m, basis));
  return rank(Matrix::from_rows(rows, basis.size()));
}

bool PhiW::spans_w(int n) const {
  const std::size_t dim = n == 0 ? 1 : chern_.w_basis(n).size();
  return span_rank(n) == dim && star_monomials(n).size() == dim;
}

Vector PhiW::star_coordinates(const GradedPoly& z, int n) const {
  const auto basis = monomial_basis(n);
  std::vector<Vector> cols;
  for (const auto& m : star_monomials(n)) cols.push_back(coordinates(m, basis));
  auto x = solve(Matrix::from_rows(cols, basis.size()).transposed(), coordinates(z.homogeneous_part(n), basis));
  if (!x) throw InvariantViolation("star monomials do not span W in degree " + std::to_string(n));
  return *x;
}

GradedPoly PhiW::apply(const GradedPoly& z) const {
  if (z.max_weight() > cap()) throw RangeError("class above the cap");
  GradedPoly out(cap());
  for (int n = 0; n <= std::max(0, z.max_weight()); ++n) {
    const GradedPoly part = z.homogeneous_part(n);
    if (part.is_zero()) continue;
    if (!chern_.is_w_class(part)) throw DomainError("phi_W needs a class in W");
    const Vector x = star_coordinates(part, n);
    const auto& labels = monomial_labels(n);
    for (std::size_t k = 0; k < labels.size(); ++k) {
      if (x[k] == 0) continue;
      if (std::any_of(labels[k].begin(), labels[k].end(), [](int p) { return p >= 5; })) continue;
      out.add_term(Monomial::from_parts(labels[k]), x[k]);
    }
  }
  return out;
}

}  // namespace cobord
