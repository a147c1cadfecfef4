// Runs the twelve acceptance criteria at degree 8 and prints one line each.
// Exit status is 0 when the failing set equals the --known-failure set.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cobord/context.hpp"
#include "cobord/error.hpp"
#include "cobord/expr.hpp"
#include "cobord/ideal.hpp"
#include "cobord/json_io.hpp"
#include "cobord/verify.hpp"

using namespace cobord;

namespace {

constexpr int kDegree = 8;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

GradedPoly P(int n) { return GradedPoly::variable(kDegree, n); }

GradedPoly cls(std::string_view text) { return evaluate(parse_class(text), kDegree); }

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
  return out;
}

// gcd of C(m+1, i) for i in [lo, hi], from Pascal's triangle.
Integer brute_gcd(int m, int lo, int hi) {
  std::vector<Integer> row{1};
  for (int r = 1; r <= m + 1; ++r) {
    std::vector<Integer> next(row.size() + 1, 1);
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i - 1] + row[i];
    row = std::move(next);
  }
  Integer g = 0;
  for (int i = lo; i <= hi; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[i].get_mpz_t());
  return g;
}

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  const std::string cmd = std::string("'") + COBORD_CLI_PATH + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

// String leaves that look like polynomials in P.
void collect_p_exprs(const json::Json& j, std::vector<std::string>& out) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('P') == std::string::npos) return;
    for (char c : s)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == 'P' || c == '*' || c == '^' || c == '/' ||
            c == '+' || c == '-'))
        return;
    out.push_back(s);
  } else if (j.is_structured()) {
    for (const auto& v : j) collect_p_exprs(v, out);
  }
}

// ---- criteria -----------------------------------------------------------------

Outcome chern_tables(const Context& ctx) {
  Outcome o;
  struct Row {
    const char* klass;
    std::vector<Partition> omegas;
    std::vector<int> values;
  };
  const std::vector<Partition> deg3 = {{3}, {2, 1}, {1, 1, 1}};
  const std::vector<Partition> deg4 = {{1, 1, 1, 1}, {2, 1, 1}, {3, 1}};
  const std::vector<Row> rows = {
      {"CP1^2", {{1, 1}, {2}}, {8, 4}},     {"CP2", {{1, 1}, {2}}, {9, 3}},
      {"CP3", deg3, {4, 24, 64}},           {"CP1*CP2", deg3, {6, 24, 54}},
      {"CP1^3", deg3, {8, 24, 48}},         {"CP1^4", deg4, {384, 192, 64}},
      {"CP1^2*CP2", deg4, {432, 204, 60}},  {"CP2^2", deg4, {486, 216, 54}},
      {"CP1*CP3", deg4, {512, 224, 56}},    {"CP4", deg4, {625, 250, 50}},
  };
  int entries = 0;
  for (const auto& row : rows)
    for (std::size_t k = 0; k < row.omegas.size(); ++k, ++entries) {
      const Rational v = ctx.chern().chern_number(cls(row.klass), row.omegas[k]);
      o.require(v == row.values[k], std::string("c[") + partition_key(row.omegas[k]) + "] of " + row.klass +
                                        " = " + to_string(v) + ", table says " + std::to_string(row.values[k]));
    }
  if (o.pass) o.detail = std::to_string(entries) + " entries exact";
  return o;
}

Outcome generators(const Context& ctx) {
  Outcome o;
  const auto ys = ctx.factory().su_low_generators();
  const int want[] = {3, 6, 10};
  std::vector<std::string> s;
  for (int k = 0; k < 3; ++k) {
    const auto& y = ys[k];
    s.push_back("s" + std::to_string(y.degree) + "=" + to_string(y.s_value));
    o.require(abs(y.s_value) == want[k], y.name() + " has s = " + to_string(y.s_value));
    for (const auto& omega : ctx.chern().partitions_of(y.degree)) {
      if (std::find(omega.begin(), omega.end(), 1) == omega.end()) continue;
      o.require(ctx.chern().chern_number(y.cls, omega) == 0,
                "c[" + partition_key(omega) + "] of " + y.name() + " is nonzero");
    }
    const NovikovResult nv = novikov_check(y.degree, y.s_value);
    o.require(nv.pass, "Novikov check fails for " + y.name() + ": " + nv.reason);
  }
  if (o.pass) o.detail = join(s) + "; c1-numbers vanish; Novikov n=2,3,4";
  return o;
}

Outcome fgl_engine(const Context& ctx) {
  Outcome o;
  const auto& U = ctx.universal();
  o.require(U.alpha(1, 1) == -P(1), "alpha11 = " + U.alpha(1, 1).to_string());
  o.require(U.alpha(1, 2) == P(1).pow(2) - P(2), "alpha12 = " + U.alpha(1, 2).to_string());

  const GradedPoly y3 = -U.alpha(2, 2);
  const GradedPoly printed_2y3 = cls("-3*CP3 + 8*CP1*CP2 - 5*CP1^3");
  const auto s3 = relative_sign(y3 * 2, printed_2y3);
  o.require(s3.has_value(), "2y3 = " + (y3 * 2).to_string() + " differs from the printed form by more than a sign");

  const GradedPoly y4 = -U.alpha(2, 3) + U.alpha(2, 2) * P(1) * GeneratorFactory::y4_literal_coefficient();
  const GradedPoly printed_y4 = cls("-2*CP1^4 + 7*CP1^2*CP2 - 3*CP2^2 - 4*CP1*CP3 + 2*CP4");
  const auto s4 = relative_sign(y4, printed_y4);
  o.require(s4.has_value(), "y4 = -alpha23 + 3/2*alpha22*P1 = " + y4.to_string() +
                                " is not +/- the printed expansion " + printed_y4.to_string());
  if (o.pass) o.detail = "y3 sign " + std::to_string(*s3) + ", y4 sign " + std::to_string(*s4);
  return o;
}

Outcome combinatorics(const Context& ctx) {
  Outcome o;
  for (int m = 2; m <= 30; ++m) {
    const Integer g = brute_gcd(m, 1, m - 1);
    o.require(d_closed_form(m) == g, "d(" + std::to_string(m) + ") closed form disagrees with the gcd");
    o.require(d_of(m) == g, "d(" + std::to_string(m) + ") disagrees with the gcd");
  }
  for (int m = 3; m <= 30; ++m)
    o.require(d2_of(m) == d_of(m) * d_of(m - 1), "d2(" + std::to_string(m) + ") != d(m)d(m-1)");
  std::vector<std::string> s;
  for (int k = 3; k <= kDegree; ++k) {
    const GeneratorRecord z = ctx.factory().z_generator(k);
    o.require(abs(z.s_value) == Rational(d_of(k) * d_of(k - 1)), "|s(z" + std::to_string(k) + ")| wrong");
    s.push_back(to_string(abs(z.s_value)));
  }
  if (o.pass) o.detail = "|s(z3..z8)| = " + join(s);
  return o;
}

Outcome w_structure(const Context& ctx) {
  Outcome o;
  const auto& ch = ctx.chern();
  for (int n = 1; n <= kDegree; ++n) {
    const auto dim = static_cast<std::int64_t>(ch.w_basis(n).size());
    o.require(dim == partition_count(n) - partition_count(n - 2), "dim W at n=" + std::to_string(n));
  }
  const GradedPoly xx = ctx.star(P(1), P(1));
  const auto sign = relative_sign(xx, P(2) * 8 - P(1).pow(2) * 9);
  o.require(sign.has_value(), "x1*x1 = " + xx.to_string());

  std::mt19937 gen(20240601);
  auto pick = [&](int n) {
    GradedPoly z(kDegree);
    for (const auto& b : ch.w_basis(n)) z += b * Rational(static_cast<int>(gen() % 7) - 3);
    return z.is_zero() ? ch.w_basis(n).front() : z;
  };
  int triples = 0;
  while (triples < 50) {
    const int na = 1 + static_cast<int>(gen() % 4), nb = 1 + static_cast<int>(gen() % 4),
              nc = 1 + static_cast<int>(gen() % 4);
    if (na + nb + nc > 6) continue;
    ++triples;
    const GradedPoly a = pick(na), b = pick(nb), c = pick(nc);
    const GradedPoly ab = ctx.star(a, b);
    o.require(ch.is_w_class(ab) && ch.is_w_class(ctx.star(b, c)), "star product left W");
    o.require(ctx.star(ab, c) == ctx.star(a, ctx.star(b, c)),
              "associativity fails in degrees " + std::to_string(na) + "," + std::to_string(nb) + "," +
                  std::to_string(nc));
  }
  if (o.pass) o.detail = "x1*x1 = " + xx.to_string() + " (sign " + std::to_string(*sign) + "), 50 triples";
  return o;
}

Outcome ideal_lemmas(const Context& ctx) {
  Outcome o;
  std::vector<GradedPoly> zs;
  for (int k = 3; k <= kDegree; ++k) zs.push_back(ctx.factory().z_generator(k).cls);
  const IdealComparison ab = ideals_equal(IdealSpec("z", zs, kDegree), abel_ideal(ctx.universal()), kDegree);
  o.require(ab.equal, "(z3..z8) vs I_Ab first differs at degree " +
                          (ab.first_failing_degree ? std::to_string(*ab.first_failing_degree) : "?"));
  const auto tilde_z = ctx.factory().i_tilde(kDegree);
  std::vector<GradedPoly> tilde_x{tilde_z.front()};
  for (const auto& x : ctx.w_generators())
    if (x.degree >= 3) tilde_x.push_back(x.cls);
  const IdealComparison t = ideals_equal(IdealSpec("x", tilde_x, kDegree), IdealSpec("z", tilde_z, kDegree), kDegree);
  o.require(t.equal, "(y2,x3..x8) vs (y2,z3..z8) first differs at degree " +
                         (t.first_failing_degree ? std::to_string(*t.first_failing_degree) : "?"));
  if (o.pass) o.detail = "both equalities hold through degree 8";
  return o;
}

Outcome regularity(const Context& ctx) {
  Outcome o;
  const auto xs = ctx.w_generators();
  std::vector<std::string> s;
  for (int from : {1, 3, 5}) {
    std::vector<GradedPoly> seq;
    for (const auto& x : xs)
      if (x.degree >= from) seq.push_back(x.cls);
    const RegularityReport r = regularity_check(seq, kDegree);
    const auto bad = r.graded.first_failure();
    o.require(r.pass(), "sequence from x" + std::to_string(from) + " fails at degree " +
                            (bad ? std::to_string(*bad) : "?"));
    s.push_back("x" + std::to_string(from) + "..x8");
  }
  if (o.pass) o.detail = join(s) + " regular through degree 8";
  return o;
}

Outcome abel(const Context& ctx) {
  Outcome o;
  const Elimination& e = ctx.abel();
  o.require(static_cast<int>(e.steps.size()) == kDegree - 2, "elimination stopped early");
  const FormalGroupLaw image = specialize_fgl(ctx.universal(), e.substitution, FglOrigin::abel);
  o.require(has_abel_shape(image), "image law is not of Abel form");
  for (const auto& row : graded_report(abel_ideal(ctx.universal())).rows)
    o.require(row.quotient_dim == static_cast<std::size_t>(row.degree / 2 + 1),
              "quotient dim at degree " + std::to_string(row.degree));
  const KricheverReport k = krichever_form_check(image);
  o.require(k.pass, "Krichever form fails at " + k.stage);
  if (o.pass) o.detail = "P3 -> " + e.substitution.image(3).to_string();
  return o;
}

Outcome buchstaber(const Context& ctx) {
  Outcome o;
  const BuchstaberData& b = ctx.buchstaber();
  o.require(b.antisymmetric(), "A is not antisymmetric");
  std::set<int> solved;
  for (const auto& st : b.elimination.steps) solved.insert(st.degree);
  for (int n = 5; n <= kDegree; ++n) o.require(solved.count(n) == 1, "P" + std::to_string(n) + " not eliminated");
  const auto free4 = free_ring_dimensions({1, 2, 3, 4}, kDegree);
  for (const auto& row : graded_report(buchstaber_ideal(b, kDegree)).rows)
    o.require(static_cast<std::int64_t>(row.quotient_dim) == free4[row.degree],
              "quotient dim at degree " + std::to_string(row.degree));
  const FormalGroupLaw image = specialize_fgl(ctx.universal(), b.elimination.substitution, FglOrigin::buchstaber);
  o.require(krichever_form_check(image).pass, "image law fails the Krichever form");
  o.require(krichever_params_of(image).success, "no Krichever parameters for the image law");
  const KricheverReport u = krichever_form_check(ctx.universal());
  o.require(!u.pass && u.failing_degree && *u.failing_degree <= kDegree, "plain universal law was not rejected");
  if (o.pass) o.detail = "universal law fails at degree " + std::to_string(*u.failing_degree) + " (" + u.stage + ")";
  return o;
}

Outcome hoehn(const Context&) {
  Outcome o;
  const HoehnGenus todd = hoehn_solve(std::array<Rational, 4>{2, 1, 0, 0}, kDegree);
  for (const Rational& v : todd.rational_images()) o.require(v == 1, "Todd image " + to_string(v));
  Rational fact = 1;
  for (int n = 1; n <= todd.f.order(); ++n) {
    fact *= n;
    const Rational want = (n % 2 ? 1 : -1) / fact;
    o.require(coeff(todd.f, n).coefficient(Monomial::variable(1, n - 1)) == want && coeff(todd.f, n).size() <= 1,
              "exponent differs from 1 - e^{-x} at x^" + std::to_string(n));
  }
  const HoehnGenus zero = hoehn_solve(std::array<Rational, 4>{0, 0, 0, 0}, kDegree);
  for (const Rational& v : zero.rational_images()) o.require(v == 0, "degenerate image " + to_string(v));
  std::mt19937 gen(8);
  for (int t = 0; t < 5; ++t) {
    std::array<Rational, 4> q;
    for (auto& v : q) v = ratio(static_cast<int>(gen() % 19) - 9, 1 + static_cast<int>(gen() % 6));
    const HoehnGenus g = hoehn_solve(q, kDegree);
    const KricheverParams back = krichever_params_of(g.law());
    bool same = back.success;
    for (int i = 0; i < 4 && same; ++i) same = back.p[i] == g.p[i];
    o.require(same, "round trip fails for q = (" + to_string(q[0]) + "," + to_string(q[1]) + "," +
                        to_string(q[2]) + "," + to_string(q[3]) + ")");
  }
  if (o.pass) o.detail = "Todd images 1, degenerate images 0, 5 round trips";
  return o;
}

Outcome phi_w(const Context& ctx) {
  Outcome o;
  const PhiW& phi = ctx.phi_w();
  for (int n = 1; n <= kDegree; ++n) o.require(phi.spans_w(n), "star monomials do not span W at n=" + std::to_string(n));
  const auto x = ctx.w_generator_map();
  for (int k = 5; k <= kDegree; ++k) o.require(phi.apply(x.at(k)).is_zero(), "phi(x" + std::to_string(k) + ") != 0");
  std::mt19937 gen(4);
  for (int t = 0; t < 20; ++t) {
    const int na = 1 + static_cast<int>(gen() % 5);
    const int nb = 1 + static_cast<int>(gen() % static_cast<unsigned>(kDegree - na));
    const auto& ma = phi.star_monomials(na);
    const auto& mb = phi.star_monomials(nb);
    const GradedPoly a = ma[gen() % ma.size()] + ma[gen() % ma.size()] * Rational(static_cast<int>(gen() % 5) - 2);
    const GradedPoly b = mb[gen() % mb.size()] - mb[gen() % mb.size()] * ratio(1, 2);
    o.require(phi.apply(phi.star(a, b)) == phi.apply(a) * phi.apply(b),
              "phi not multiplicative in degrees " + std::to_string(na) + "," + std::to_string(nb));
  }
  if (o.pass) o.detail = "spans W; kills x5..x8; 20 products";
  return o;
}

Outcome cli(const Context&) {
  Outcome o;
  std::vector<std::string> exprs;
  for (const char* args : {"--format json generators --family all", "--format json abel", "--format json buchstaber",
                           "--format json alpha 3 4", "--format json ideal --name tilde"}) {
    const Run r = run_cli(std::string(args) + " --max-degree 8");
    o.require(r.status == 0, std::string("'") + args + "' exited " + std::to_string(r.status));
    if (r.status != 0) continue;
    collect_p_exprs(json::Json::parse(r.out), exprs);
  }
  for (const auto& s : exprs) {
    try {
      const ClassExpr e = parse_class(s);
      o.require(print(e) == s, "round trip changed '" + s + "'");
    } catch (const Error& e) {
      o.require(false, "cannot reparse '" + s + "': " + e.what());
    }
  }
  o.require(exprs.size() > 20, "too few expressions collected");
  const Run a = run_cli("verify --suite all --max-degree 8");
  const Run b = run_cli("verify --suite all --max-degree 8");
  o.require(a.status == 0, "verify exited " + std::to_string(a.status));
  o.require(b.status == 0 && a.out == b.out && !a.out.empty(), "verify output differs between runs");
  if (o.pass) o.detail = std::to_string(exprs.size()) + " expressions round trip; verify stable";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> known;
  app.add_option("--known-failure", known, "Criterion expected to fail");
  CLI11_PARSE(app, argc, argv);

  const Context ctx(Config{kDegree});
  const std::vector<std::pair<std::string, std::function<Outcome(const Context&)>>> criteria = {
      {"Chern tables", chern_tables},   {"generators y2 y3 y4", generators},
      {"FGL engine", fgl_engine},       {"combinatorics", combinatorics},
      {"W structure", w_structure},     {"ideal lemmas", ideal_lemmas},
      {"regularity", regularity},       {"Abel", abel},
      {"Buchstaber/Krichever", buchstaber}, {"Hoehn genus", hoehn},
      {"phi_W", phi_w},                 {"CLI", cli},
  };
  const std::set<int> expected(known.begin(), known.end());
  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    Outcome o;
    try {
      o = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << std::setw(2) << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first;
    if (!o.pass && expected.count(id)) std::cout << " [known]";
    std::cout << ": " << o.detail << "\n";
  }
  std::cout << (criteria.size() - failed.size()) << "/" << criteria.size() << " criteria pass\n";
  return failed == expected ? 0 : 1;
}
