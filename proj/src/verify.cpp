#include "cobord/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "cobord/error.hpp"
#include "cobord/expr.hpp"
#include "cobord/ideal.hpp"

namespace cobord {

namespace {

GradedPoly P(const Context& ctx, int n) { return GradedPoly::variable(ctx.cap(), n); }

GradedPoly cls(const Context& ctx, std::string_view text) { return evaluate(parse_class(text), ctx.cap()); }

std::string sign_text(std::optional<int> s) {
  if (!s) return "no common sign";
  return *s > 0 ? "sign +1" : "sign -1";
}

class Collector {
 public:
  Collector(std::string suite, std::vector<VerifyItem>& out) : suite_(std::move(suite)), out_(out) {}

  void check(std::string name, bool pass, std::string detail = {}) {
    out_.push_back({suite_, std::move(name), pass, std::move(detail)});
  }

  // Runs `body`; an exception becomes a failed item.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      check(name, false, std::string("error: ") + e.what());
    }
  }

 private:
  std::string suite_;
  std::vector<VerifyItem>& out_;
};

// Small deterministic sampler that does not depend on library distributions.
class Sampler {
 public:
  explicit Sampler(std::uint32_t seed) : gen_(seed) {}
  int small(int lo, int hi) { return lo + static_cast<int>(gen_() % static_cast<std::uint32_t>(hi - lo + 1)); }

  GradedPoly w_class(const ChernCalculus& chern, int n) {
    GradedPoly out(chern.cap());
    for (const auto& b : chern.w_basis(n)) out += b * Rational(small(-3, 3));
    if (out.is_zero()) out = chern.w_basis(n).front();
    return out;
  }

 private:
  std::mt19937 gen_;
};

struct TableRow {
  const char* klass;
  std::vector<Partition> omegas;
  std::vector<int> values;
};

void paper_tables(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("paper-tables", out);
  const auto& ch = ctx.chern();
  const std::vector<TableRow> rows = {
      {"CP1^2", {{1, 1}, {2}}, {8, 4}},
      {"CP2", {{1, 1}, {2}}, {9, 3}},
      {"CP3", {{3}, {2, 1}, {1, 1, 1}}, {4, 24, 64}},
      {"CP1*CP2", {{3}, {2, 1}, {1, 1, 1}}, {6, 24, 54}},
      {"CP1^3", {{3}, {2, 1}, {1, 1, 1}}, {8, 24, 48}},
      {"CP1^4", {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}}, {384, 192, 64}},
      {"CP1^2*CP2", {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}}, {432, 204, 60}},
      {"CP2^2", {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}}, {486, 216, 54}},
      {"CP1*CP3", {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}}, {512, 224, 56}},
      {"CP4", {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}}, {625, 250, 50}},
  };
  for (const auto& row : rows) {
    const GradedPoly z = cls(ctx, row.klass);
    if (z.max_weight() > ctx.cap()) continue;
    std::string got;
    std::string want;
    bool pass = true;
    for (std::size_t k = 0; k < row.omegas.size(); ++k) {
      const Rational v = ch.chern_number(z, row.omegas[k]);
      got += (k ? "," : "") + to_string(v);
      want += (k ? "," : "") + std::to_string(row.values[k]);
      pass = pass && v == row.values[k];
    }
    std::string omegas;
    for (std::size_t k = 0; k < row.omegas.size(); ++k) omegas += (k ? " " : "") + ("c[" + partition_key(row.omegas[k]) + "]");
    c.check(omegas + " of " + row.klass + " = " + want, pass, "got " + got);
  }
  const auto& U = ctx.universal();
  c.check("alpha11 = -P1", U.alpha(1, 1) == -P(ctx, 1), U.alpha(1, 1).to_string());
  if (ctx.cap() >= 2) {
    c.check("alpha12 = P1^2-P2 = [V]", U.alpha(1, 2) == P(ctx, 1).pow(2) - P(ctx, 2), U.alpha(1, 2).to_string());
  }
  if (ctx.cap() >= 4) {
    c.guarded("y2, y3, y4", [&] {
      const auto ys = ctx.factory().su_low_generators();
      const int want[] = {3, 6, 10};
      for (int k = 0; k < 3; ++k) {
        const auto& y = ys[k];
        c.check("|s" + std::to_string(y.degree) + "(" + y.name() + ")| = " + std::to_string(want[k]),
                abs(y.s_value) == want[k], "s = " + to_string(y.s_value));
        c.check("c1-numbers of " + y.name() + " vanish", ch.is_su_class(y.cls), y.cls.to_string());
      }
    });
  }
}

void generators(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("generators", out);
  {
    bool ok = true;
    std::string first;
    for (int m = 1; m <= 30; ++m) {
      if (d_of(m) != d_closed_form(m)) {
        ok = false;
        if (first.empty()) first = "m = " + std::to_string(m);
      }
    }
    c.check("d(m) closed form equals the gcd, m <= 30", ok, first);
  }
  {
    bool ok = true;
    std::string first;
    for (int m = 3; m <= 30; ++m) {
      const bool eq = d2_of(m) == d_of(m) * d_of(m - 1);
      const bool cert = euclid_combo(m, 2, std::max(2, m - 2), EuclidCombo::Range::inner).certificate() &&
                        euclid_combo(m, 1, std::max(1, m - 1), EuclidCombo::Range::full).certificate();
      if (!eq || !cert) {
        ok = false;
        if (first.empty()) first = "m = " + std::to_string(m);
      }
    }
    c.check("d2(m) = d(m)d(m-1) with Euclid certificates, 3 <= m <= 30", ok, first);
  }
  const auto& f = ctx.factory();
  for (int k = 3; k <= ctx.cap(); ++k) {
    const std::string name = "z" + std::to_string(k);
    c.guarded(name, [&] {
      const auto z = f.z_generator(k);
      const Integer want = d_of(k) * d_of(k - 1);
      c.check("|s" + std::to_string(k) + "(" + name + ")| = d(k)d(k-1) = " + want.get_str(), abs(z.s_value) == want,
              "s = " + to_string(z.s_value));
    });
  }
  c.guarded("x_k", [&] {
    for (const auto& x : ctx.w_generators()) {
      const int k = x.degree;
      const Integer want = k == 1 ? Integer(2) : d_of(k) * d_of(k - 1);
      bool in_tilde = true;
      if (k >= 3) {
        const IdealSpec tilde("I~", f.i_tilde(k - 1), ctx.cap());
        const auto z = f.z_generator(k);
        const Rational sigma = x.s_value / z.s_value;  // normalization sign
        in_tilde = ideal_member(tilde, x.cls - z.cls * sigma);
      }
      c.check(x.name() + " in W, s = " + want.get_str() + ", Novikov",
              x.certificates.w_member && x.s_value == want && x.certificates.novikov.pass && in_tilde,
              x.cls.to_string());
    }
  });
  if (ctx.cap() >= 4) {
    c.guarded("SU low", [&] {
      for (const auto& y : f.su_low_generators()) {
        c.check("Novikov criterion for " + y.name(), y.certificates.novikov.pass,
                "odd part " + y.certificates.novikov.odd_part.get_str());
        c.check(y.name() + " certificates recompute", record_consistent(ctx.chern(), y));
      }
    });
  }
  for (int i = 5; i <= ctx.cap(); ++i) {
    c.guarded("su" + std::to_string(i), [&] {
      const auto y = f.su_generator(i);
      Integer want = d_of(i) * d_of(i - 1) * (i % 2 == 0 ? 2 : 1);
      c.check("SU class y" + std::to_string(i) + " with s = " + want.get_str(),
              y.certificates.su_member && y.s_value == want && record_consistent(ctx.chern(), y), y.cls.to_string());
    });
  }
}

void abel(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("abel", out);
  if (ctx.cap() < 3) return;
  c.guarded("Abel elimination", [&] {
    const auto& e = ctx.abel();
    c.check("Abel elimination through degree " + std::to_string(ctx.cap()),
            static_cast<int>(e.steps.size()) == ctx.cap() - 2);
    const auto image = specialize_fgl(ctx.universal(), e.substitution, FglOrigin::abel);
    c.check("image law has Abel shape", has_abel_shape(image));
    std::vector<std::int64_t> expected;
    for (int n = 0; n <= ctx.cap(); ++n) expected.push_back(n / 2 + 1);
    const auto report = graded_report(abel_ideal(ctx.universal()), expected);
    c.check("quotient dimensions floor(n/2)+1", report.pass(),
            report.first_failure() ? "degree " + std::to_string(*report.first_failure()) : "");
    const auto kr = krichever_form_check(image);
    c.check("image law has Krichever form", kr.pass, kr.pass ? "" : kr.stage);
    const auto kp = krichever_params_of(image);
    c.check("Abel image is a Krichever-Hoehn specialization", kp.success);
  });
}

void buchstaber(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("buchstaber", out);
  if (ctx.cap() < 5) return;
  c.guarded("Buchstaber elimination", [&] {
    const auto& b = ctx.buchstaber();
    c.check("A antisymmetric", b.antisymmetric());
    c.check("elimination for n = 5.." + std::to_string(ctx.cap()),
            static_cast<int>(b.elimination.steps.size()) == ctx.cap() - 4);
    const auto report = graded_report(buchstaber_ideal(b, ctx.cap()), free_ring_dimensions({1, 2, 3, 4}, ctx.cap()));
    c.check("quotient dimensions of a weight (1,2,3,4) ring", report.pass(),
            report.first_failure() ? "degree " + std::to_string(*report.first_failure()) : "");
    const auto image = specialize_fgl(ctx.universal(), b.elimination.substitution, FglOrigin::buchstaber);
    const auto kr = krichever_form_check(image);
    c.check("image law has Krichever form", kr.pass, kr.pass ? "" : kr.stage);
    const auto kp = krichever_params_of(image);
    std::string ps;
    for (int i = 0; i < 4; ++i) ps += (i ? ", " : "") + kp.p[i].to_string();
    c.check("Krichever-Hoehn parameters recovered", kp.success, ps);
    const auto ku = krichever_form_check(ctx.universal());
    c.check("universal law fails the Krichever form", !ku.pass,
            ku.pass ? "" : "first failure at degree " + std::to_string(*ku.failing_degree));
  });
}

void hoehn(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("hoehn", out);
  c.guarded("Todd", [&] {
    const auto g = hoehn_solve(std::array<Rational, 4>{2, 1, 0, 0}, ctx.cap());
    bool ok = g.residual_zero;
    for (const auto& v : g.rational_images()) ok = ok && v == 1;
    c.check("(2,1,0,0) gives the Todd genus", ok);
  });
  c.guarded("zero", [&] {
    const auto g = hoehn_solve(std::array<Rational, 4>{0, 0, 0, 0}, ctx.cap());
    bool ok = g.residual_zero;
    for (const auto& v : g.rational_images()) ok = ok && v == 0;
    c.check("(0,0,0,0) kills every P_n", ok);
  });
  c.guarded("generic", [&] {
    const auto g = hoehn_solve_generic(ctx.cap());
    bool ok = g.residual_zero;
    for (std::size_t n = 0; n < g.images.size(); ++n) ok = ok && g.images[n].is_homogeneous(static_cast<int>(n) + 1);
    c.check("generic images are homogeneous in p1..p4", ok);
  });
  Sampler s(20240607);
  for (int t = 0; t < 5; ++t) {
    std::array<Rational, 4> q;
    for (auto& v : q) v = ratio(s.small(-5, 5), s.small(1, 4));
    std::string name = "round trip (";
    for (int i = 0; i < 4; ++i) name += (i ? "," : "") + to_string(q[i]);
    name += ")";
    c.guarded(name, [&] {
      const auto g = hoehn_solve(q, ctx.cap());
      const auto kp = krichever_params_of(g.law());
      bool ok = kp.success;
      for (int i = 0; i < 4; ++i) ok = ok && kp.p[i] == g.p[i];
      c.check(name, ok);
    });
  }
}

void ideals(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("ideals", out);
  const int cap = ctx.cap();
  if (cap < 3) return;
  c.guarded("I = I_Ab", [&] {
    std::vector<GradedPoly> zs;
    for (int k = 3; k <= cap; ++k) zs.push_back(ctx.factory().z_generator(k).cls);
    const IdealSpec i("I", zs, cap);
    const IdealSpec ab = abel_ideal(ctx.universal());
    const auto cmp = ideals_equal(i, ab, cap);
    c.check("(z3..z" + std::to_string(cap) + ") = I_Ab", cmp.equal,
            cmp.first_failing_degree ? "degree " + std::to_string(*cmp.first_failing_degree) : "");
    c.check("z3 in I_Ab", ideal_member(ab, zs.front()));
    c.check("P1 not in I_Ab", !ideal_member(ab, P(ctx, 1)));
  });
  c.guarded("main lemma", [&] {
    std::vector<GradedPoly> xs{ctx.factory().i_tilde(2)[0]};
    for (const auto& r : ctx.w_generators())
      if (r.degree >= 3) xs.push_back(r.cls);
    const auto cmp = ideals_equal(IdealSpec("J", xs, cap), IdealSpec("I~", ctx.factory().i_tilde(cap), cap), cap);
    c.check("(y2, x3..x" + std::to_string(cap) + ") = (y2, z3..z" + std::to_string(cap) + ")", cmp.equal,
            cmp.first_failing_degree ? "degree " + std::to_string(*cmp.first_failing_degree) : "");
  });
  const auto neg = ideals_equal(IdealSpec("(P1)", {P(ctx, 1)}, cap), IdealSpec("(P1^2)", {P(ctx, 1).pow(2)}, cap), cap);
  c.check("(P1) and (P1^2) differ in degree 1", !neg.equal && neg.first_failing_degree == 1);
}

void regularity(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("regularity", out);
  c.guarded("regular sequences", [&] {
    const auto& xs = ctx.w_generators();
    for (int from : {1, 3, 5}) {
      std::vector<GradedPoly> seq;
      for (const auto& r : xs)
        if (r.degree >= from) seq.push_back(r.cls);
      if (seq.empty()) continue;
      const auto rep = regularity_check(seq, ctx.cap());
      const std::string name =
          "(x" + std::to_string(from == 1 ? 1 : from) + (from == 1 ? ",x3" : "") + "..x" + std::to_string(ctx.cap()) + ")";
      c.check(name + " is regular through degree " + std::to_string(ctx.cap()), rep.pass(),
              rep.graded.first_failure() ? "degree " + std::to_string(*rep.graded.first_failure()) : "");
    }
  });
  if (ctx.cap() >= 2) {
    const auto rep = regularity_check({P(ctx, 1), P(ctx, 1).pow(2)}, ctx.cap());
    c.check("(P1, P1^2) is not regular (degree 2)", !rep.pass() && rep.graded.first_failure() == 2);
  }
}

void phiw(const Context& ctx, std::vector<VerifyItem>& out) {
  Collector c("phiw", out);
  const int cap = ctx.cap();
  const auto& ch = ctx.chern();
  {
    bool ok = true;
    for (int n = 1; n <= cap; ++n)
      ok = ok && static_cast<std::int64_t>(ch.w_basis(n).size()) == partition_count(n) - partition_count(n - 2);
    c.check("dim W_2n = p(n) - p(n-2)", ok);
  }
  if (cap < 3) return;
  c.guarded("star products", [&] {
    const GradedPoly x1 = P(ctx, 1);
    const GradedPoly sq = ctx.star(x1, x1);
    const GradedPoly ref = P(ctx, 2) * Rational(8) - x1.pow(2) * Rational(9);
    c.check("x1*x1 = +-(8P2 - 9P1^2)", relative_sign(sq, ref).has_value(), sq.to_string());
    Sampler s(7);
    bool closed = true;
    bool assoc = true;
    for (int t = 0; t < 50; ++t) {
      int a = s.small(1, 2), b = s.small(1, 2), d = s.small(1, 2);
      if (a + b + d > std::min(cap, 6)) continue;
      const GradedPoly u = s.w_class(ch, a), v = s.w_class(ch, b), w = s.w_class(ch, d);
      const GradedPoly uv = ctx.star(u, v);
      closed = closed && ch.is_w_class(uv);
      assoc = assoc && ctx.star(uv, w) == ctx.star(u, ctx.star(v, w));
    }
    c.check("star products stay in W", closed);
    c.check("star product associative on sampled triples", assoc);
  });
  c.guarded("phi_W", [&] {
    const auto& phi = ctx.phi_w();
    bool spans = true;
    for (int n = 0; n <= cap; ++n) spans = spans && phi.spans_w(n);
    c.check("star monomials span W", spans);
    const auto gens = ctx.w_generator_map();
    bool kills = true;
    for (int k = 5; k <= cap; ++k) kills = kills && phi.apply(gens.at(k)).is_zero();
    if (cap >= 5) c.check("phi_W(x_k) = 0 for k >= 5", kills);
    const GradedPoly X1 = GradedPoly::variable(cap, 1);
    c.check("phi_W(x1) = X1", phi.apply(gens.at(1)) == X1);
    c.check("phi_W(x1*x1) = X1^2", phi.apply(ctx.star(gens.at(1), gens.at(1))) == X1.pow(2));
    Sampler s(11);
    bool mult = true;
    for (int t = 0; t < 20; ++t) {
      const int a = s.small(1, cap - 1);
      const int b = s.small(1, cap - a);
      const GradedPoly u = s.w_class(ch, a), v = s.w_class(ch, b);
      mult = mult && phi.apply(ctx.star(u, v)) == phi.apply(u) * phi.apply(v);
    }
    c.check("phi_W multiplicative on sampled star products", mult);
  });
}

using SuiteFn = void (*)(const Context&, std::vector<VerifyItem>&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table = {
      {"paper-tables", paper_tables}, {"generators", generators}, {"abel", abel},
      {"buchstaber", buchstaber},     {"hoehn", hoehn},           {"ideals", ideals},
      {"regularity", regularity},     {"phiw", phiw},
  };
  return table;
}

}  // namespace

std::optional<int> relative_sign(const GradedPoly& a, const GradedPoly& b) {
  if (a == b) return 1;
  if (a == -b) return -1;
  return std::nullopt;
}

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suite_table()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

bool VerifyReport::pass() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  std::size_t n = 0;
  for (const auto& i : items) n += i.pass ? 0 : 1;
  return n;
}

std::vector<LedgerEntry> convention_ledger(const Context& ctx) {
  std::vector<LedgerEntry> out;
  const int cap = ctx.cap();
  const auto& U = ctx.universal();
  const auto& ch = ctx.chern();

  {
    bool all_negative = true;
    for (int i = 1; i <= cap; ++i)
      for (int j = i; i + j - 1 <= cap; ++j)
        all_negative = all_negative && ch.s_number(U.alpha(i, j), i + j - 1) == -Rational(binomial(i + j, i));
    out.push_back({"alpha s-numbers", "s_{i+j-1}(alpha_ij) = -C(i+j, i) for i+j-1 <= " + std::to_string(cap),
                   all_negative ? "holds" : "fails"});
  }
  if (cap >= 2) {
    out.push_back({"[V]", "alpha12 = " + U.alpha(1, 2).to_string() + " against CP1^2-CP2",
                   sign_text(relative_sign(U.alpha(1, 2), cls(ctx, "CP1^2-CP2")))});
  }
  if (cap >= 3) {
    const GradedPoly printed = cls(ctx, "-3/2*CP3+4*CP1*CP2-5/2*CP1^3");
    out.push_back({"y3", "-alpha22 = " + (-U.alpha(2, 2)).to_string() + " against 2*y3 = -3*CP3+8*CP1*CP2-5*CP1^3",
                   sign_text(relative_sign(-U.alpha(2, 2), printed))});
    const GradedPoly x1 = GradedPoly::variable(cap, 1);
    if (cap >= 2) {
      const GradedPoly sq = ctx.star(x1, x1);
      out.push_back({"x1*x1", "x1*x1 = " + sq.to_string() + " against 8*CP2-9*CP1^2",
                     sign_text(relative_sign(sq, cls(ctx, "8*CP2-9*CP1^2")))});
    }
  }
  if (cap >= 4) {
    const auto& f = ctx.factory();
    const GradedPoly printed = cls(ctx, "-2*CP1^4+7*CP1^2*CP2-3*CP2^2-4*CP1*CP3+2*CP4");
    const GradedPoly literal = f.y4_family(GeneratorFactory::y4_literal_coefficient());
    out.push_back({"y4 formula", "-alpha23+3/2*alpha22*P1 = " + literal.to_string() +
                                     " against -2*CP1^4+7*CP1^2*CP2-3*CP2^2-4*CP1*CP3+2*CP4",
                   sign_text(relative_sign(literal, printed))});
    out.push_back({"y4 formula SU", "-alpha23+3/2*alpha22*P1 has c1c3 = " + to_string(ch.chern_number(literal, {3, 1})),
                   ch.is_su_class(literal) ? "SU" : "not SU"});
    out.push_back({"y4 expansion SU", "printed expansion has c1c3 = " + to_string(ch.chern_number(printed, {3, 1})),
                   ch.is_su_class(printed) ? "SU" : "not SU"});
    const Rational c = f.y4_su_coefficient();
    out.push_back({"y4 used", "y4 = -alpha23+" + to_string(c) + "*alpha22*P1 = " + f.y4_family(c).to_string(),
                   "SU, s4 = " + to_string(ch.s_number(f.y4_family(c), 4))});
  }
  out.push_back({"term order", "classes print by weight, then descending exponent vectors", "canonical"});
  return out;
}

VerifyReport run_verify(const Context& ctx, std::string_view suite) {
  VerifyReport r;
  r.max_degree = ctx.cap();
  r.suite = std::string(suite);
  bool found = false;
  for (const auto& [name, fn] : suite_table()) {
    if (suite == "all" || suite == name) {
      fn(ctx, r.items);
      found = true;
    }
  }
  if (!found) throw ConfigError("unknown suite '" + std::string(suite) + "'");
  r.ledger = convention_ledger(ctx);
  return r;
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream os;
  os << "verify " << r.suite << " (max degree " << r.max_degree << ")\n";
  std::string current;
  for (const auto& i : r.items) {
    if (i.suite != current) {
      current = i.suite;
      os << "\n[" << current << "]\n";
    }
    os << (i.pass ? "PASS  " : "FAIL  ") << i.name;
    if (!i.detail.empty()) os << "  (" << i.detail << ")";
    os << "\n";
  }
  os << "\nconvention ledger\n";
  for (const auto& e : r.ledger) os << "  " << e.topic << ": " << e.observation << " -> " << e.status << "\n";
  os << "\n" << r.items.size() - r.failures() << " passed, " << r.failures() << " failed\n";
  return os.str();
}

json::Json render_json(const VerifyReport& r) {
  json::Json items = json::Json::array();
  for (const auto& i : r.items)
    items.push_back({{"suite", i.suite}, {"name", i.name}, {"pass", i.pass}, {"detail", i.detail}});
  json::Json ledger = json::Json::array();
  for (const auto& e : r.ledger) ledger.push_back({{"topic", e.topic}, {"observation", e.observation}, {"status", e.status}});
  return json::Json{{"suite", r.suite},      {"max_degree", r.max_degree}, {"pass", r.pass()},
                    {"failures", r.failures()}, {"items", items},          {"convention_ledger", ledger}};
}

}  // namespace cobord
