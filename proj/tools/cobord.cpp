// cobord: command-line front end for the cobordism formal-group-law engine.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "cobord/context.hpp"
#include "cobord/error.hpp"
#include "cobord/expr.hpp"
#include "cobord/json_io.hpp"
#include "cobord/verify.hpp"

using namespace cobord;
using cobord::json::Json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

struct Output {
  bool as_json = false;
  std::ostringstream text;
  Json result = Json::object();
  int code = 0;
};

GradedPoly read_class(const Context& ctx, const std::string& text) { return evaluate_class(ctx, parse_class(text)); }

int class_degree(const GradedPoly& z) {
  auto w = z.homogeneous_weight();
  if (!w) throw DomainError("class must be nonzero and homogeneous");
  return *w;
}

void cmd_alpha(const Context& ctx, int i, int j, Output& out) {
  if (i < 1 || j < 1) throw DomainError("indices start at 1");
  if (i + j - 1 > ctx.cap()) throw RangeError("alpha(i,j) has weight i+j-1 above the maximum degree");
  const GradedPoly a = ctx.universal().alpha(i, j);
  out.text << a.to_string() << "\n";
  out.result = Json{{"i", i}, {"j", j}, {"weight", i + j - 1}, {"class", a.to_string()}};
}

void cmd_chern(const Context& ctx, const std::string& klass, const std::string& omega, Output& out) {
  const GradedPoly z = read_class(ctx, klass);
  const int n = class_degree(z);
  if (!omega.empty()) {
    const Partition w = parse_partition(omega);
    const Rational v = ctx.chern().chern_number(z, w);
    out.text << to_string(v) << "\n";
    out.result = Json{{"class", z.to_string()}, {"omega", partition_key(w)}, {"value", json::rational(v)}};
    return;
  }
  const ChernVector v = ctx.chern().chern_vector(z, n);
  const auto& parts = ctx.chern().partitions_of(n);
  for (std::size_t k = 0; k < parts.size(); ++k) out.text << "c[" << partition_key(parts[k]) << "] = " << to_string(v.numbers[k]) << "\n";
  out.result = json::chern_vector(ctx.chern(), v);
  out.result["class"] = z.to_string();
}

void cmd_snumber(const Context& ctx, const std::string& klass, Output& out) {
  const GradedPoly z = read_class(ctx, klass);
  const int n = class_degree(z);
  const Rational s = ctx.chern().s_number(z, n);
  out.text << to_string(s) << "\n";
  out.result = Json{{"class", z.to_string()}, {"degree", n}, {"s", json::rational(s)}};
}

void cmd_boundary(const Context& ctx, const std::string& klass, Output& out) {
  const GradedPoly z = read_class(ctx, klass);
  const GradedPoly d = ctx.chern().boundary(z);
  out.text << d.to_string() << "\n";
  out.result = Json{{"class", z.to_string()}, {"boundary", d.to_string()}};
}

void cmd_star(const Context& ctx, const std::string& a, const std::string& b, Output& out) {
  const GradedPoly x = read_class(ctx, a);
  const GradedPoly y = read_class(ctx, b);
  const GradedPoly p = ctx.star(x, y);
  out.text << p.to_string() << "\n";
  out.result = Json{{"a", x.to_string()}, {"b", y.to_string()}, {"product", p.to_string()}};
}

void cmd_generators(const Context& ctx, const std::string& family, Output& out) {
  std::vector<GeneratorRecord> records;
  const auto& f = ctx.factory();
  const bool all = family == "all";
  if (all || family == "e")
    for (int m = 1; m <= ctx.cap(); ++m) records.push_back(f.e_generator(m));
  if (all || family == "z")
    for (int k = 3; k <= ctx.cap(); ++k) records.push_back(f.z_generator(k));
  if (all || family == "x")
    for (const auto& r : ctx.w_generators()) records.push_back(r);
  if (all || family == "y") {
    if (ctx.cap() >= 4)
      for (const auto& r : f.su_low_generators()) records.push_back(r);
    for (int i = 5; i <= ctx.cap(); ++i) records.push_back(f.su_generator(i));
  }
  Json list = Json::array();
  for (const auto& r : records) {
    out.text << r.name() << " = " << r.cls.to_string() << "  s=" << to_string(r.s_value)
             << " W=" << r.certificates.w_member << " SU=" << r.certificates.su_member
             << " novikov=" << r.certificates.novikov.pass << "\n";
    list.push_back(json::generator(r));
  }
  out.result = Json{{"family", family}, {"generators", list}};
}

void report_law(const FormalGroupLaw& law, Output& out, Json& j) {
  const auto kr = krichever_form_check(law);
  const auto kp = krichever_params_of(law);
  out.text << "krichever form: " << (kr.pass ? "pass" : "fail");
  if (!kr.pass) out.text << " (" << kr.stage << ", degree " << *kr.failing_degree << ")";
  out.text << "\nkrichever-hoehn parameters: " << (kp.success ? "found" : "not found");
  if (!kp.success) out.text << " (order " << *kp.failing_order << ")";
  out.text << "\n";
  for (int i = 0; i < 4; ++i) out.text << "  p" << i + 1 << " = " << kp.p[i].to_string(law.ring_symbol()) << "\n";
  j["krichever_form"] = json::krichever(kr, law.ring_symbol());
  j["krichever_params"] = json::krichever_params(kp, law.ring_symbol());
}

void print_elimination(const Elimination& e, Output& out) {
  for (const auto& s : e.steps)
    out.text << "P" << s.degree << " -> " << s.image.to_string() << "  (pivot (" << s.pivot.first << ","
             << s.pivot.second << "), " << s.entries_checked << " more entries checked)\n";
}

void cmd_abel(const Context& ctx, Output& out) {
  const auto& e = ctx.abel();
  print_elimination(e, out);
  const auto law = specialize_fgl(ctx.universal(), e.substitution, FglOrigin::abel);
  std::vector<std::int64_t> expected;
  for (int n = 0; n <= ctx.cap(); ++n) expected.push_back(n / 2 + 1);
  const auto dims = graded_report(abel_ideal(ctx.universal()), expected);
  out.text << "abel shape: " << (has_abel_shape(law) ? "yes" : "no") << "\n";
  out.text << "quotient dimensions:";
  for (const auto& r : dims.rows) out.text << " " << r.quotient_dim;
  out.text << (dims.pass() ? "  (match floor(n/2)+1)" : "  (mismatch)") << "\n";
  out.result = json::elimination(e);
  out.result["abel_shape"] = has_abel_shape(law);
  out.result["quotient"] = json::graded_report(dims);
  report_law(law, out, out.result);
}

void cmd_buchstaber(const Context& ctx, Output& out) {
  const auto& b = ctx.buchstaber();
  print_elimination(b.elimination, out);
  const auto law = specialize_fgl(ctx.universal(), b.elimination.substitution, FglOrigin::buchstaber);
  const auto dims = graded_report(buchstaber_ideal(b, ctx.cap()), free_ring_dimensions({1, 2, 3, 4}, ctx.cap()));
  out.text << "A antisymmetric: " << (b.antisymmetric() ? "yes" : "no") << "\n";
  out.text << "quotient dimensions:";
  for (const auto& r : dims.rows) out.text << " " << r.quotient_dim;
  out.text << (dims.pass() ? "  (match weights 1,2,3,4)" : "  (mismatch)") << "\n";
  out.result = json::elimination(b.elimination);
  out.result["antisymmetric"] = b.antisymmetric();
  out.result["quotient"] = json::graded_report(dims);
  report_law(law, out, out.result);
}

std::array<Rational, 4> parse_p(const std::string& text) {
  std::array<Rational, 4> q;
  std::stringstream ss(text);
  std::string item;
  int k = 0;
  while (std::getline(ss, item, ',')) {
    if (k >= 4) throw DomainError("--p takes exactly four values");
    q[k++] = parse_rational(item);
  }
  if (k != 4) throw DomainError("--p takes exactly four values");
  return q;
}

void cmd_hoehn(const Context& ctx, const std::string& p, Output& out) {
  const HoehnGenus g = p.empty() ? hoehn_solve_generic(ctx.cap()) : hoehn_solve(parse_p(p), ctx.cap());
  if (g.graded_rational) {
    const auto im = g.rational_images();
    for (std::size_t n = 0; n < im.size(); ++n) out.text << "P" << n + 1 << " -> " << to_string(im[n]) << "\n";
  } else {
    for (std::size_t n = 0; n < g.images.size(); ++n) out.text << "P" << n + 1 << " -> " << g.images[n].to_string(g.symbol) << "\n";
  }
  out.text << "ode residual: " << (g.residual_zero ? "zero" : "nonzero") << "\n";
  out.result = json::hoehn(g);
}

void cmd_krichever(const Context& ctx, const std::string& law_name, const std::string& p, Output& out) {
  std::optional<FormalGroupLaw> law;
  if (law_name == "universal") {
    law.emplace(ctx.universal());
  } else if (law_name == "abel") {
    law.emplace(specialize_fgl(ctx.universal(), ctx.abel().substitution, FglOrigin::abel));
  } else if (law_name == "buchstaber") {
    law.emplace(specialize_fgl(ctx.universal(), ctx.buchstaber().elimination.substitution, FglOrigin::buchstaber));
  } else if (law_name == "additive") {
    law.emplace(additive_fgl(ctx.cap()));
  } else if (law_name == "hoehn") {
    law.emplace((p.empty() ? hoehn_solve_generic(ctx.cap()) : hoehn_solve(parse_p(p), ctx.cap())).law());
  } else {
    throw DomainError("unknown law '" + law_name + "'");
  }
  out.result = Json{{"law", law_name}};
  report_law(*law, out, out.result);
}

void cmd_phiw(const Context& ctx, const std::string& klass, Output& out) {
  const GradedPoly z = read_class(ctx, klass);
  const GradedPoly v = ctx.phi_w().apply(z);
  out.text << v.to_string("X") << "\n";
  out.result = Json{{"class", z.to_string()}, {"phi_w", v.to_string("X")}};
}

void cmd_ideal(const Context& ctx, const std::string& name, const std::vector<std::string>& gens,
               const std::string& member, Output& out) {
  const int cap = ctx.cap();
  std::optional<IdealSpec> ideal;
  std::optional<std::vector<std::int64_t>> expected;
  if (!gens.empty()) {
    std::vector<GradedPoly> g;
    for (const auto& t : gens) g.push_back(read_class(ctx, t));
    ideal.emplace("custom", g, cap);
  } else if (name == "abel") {
    ideal.emplace(abel_ideal(ctx.universal()));
    expected.emplace();
    for (int n = 0; n <= cap; ++n) expected->push_back(n / 2 + 1);
  } else if (name == "buchstaber") {
    ideal.emplace(buchstaber_ideal(ctx.buchstaber(), cap));
    expected = free_ring_dimensions({1, 2, 3, 4}, cap);
  } else if (name == "z") {
    std::vector<GradedPoly> g;
    for (int k = 3; k <= cap; ++k) g.push_back(ctx.factory().z_generator(k).cls);
    ideal.emplace("I", g, cap);
  } else if (name == "tilde") {
    ideal.emplace("I~", ctx.factory().i_tilde(cap), cap);
  } else {
    throw DomainError("unknown ideal '" + name + "'");
  }
  const auto rep = graded_report(*ideal, expected);
  out.text << "degree ideal ambient quotient" << (expected ? " expected" : "") << "\n";
  for (const auto& r : rep.rows) {
    out.text << r.degree << " " << r.ideal_dim << " " << r.ambient_dim << " " << r.quotient_dim;
    if (r.expected) out.text << " " << *r.expected << (r.pass ? "" : " FAIL");
    out.text << "\n";
  }
  out.result = json::graded_report(rep);
  if (!member.empty()) {
    const bool in = ideal_member(*ideal, read_class(ctx, member));
    out.text << "member: " << (in ? "yes" : "no") << "\n";
    out.result["member"] = in;
  }
}

void cmd_verify(const Context& ctx, const std::string& suite, Output& out) {
  const VerifyReport r = run_verify(ctx, suite);
  out.text << render_text(r);
  out.result = render_json(r);
  if (!r.pass()) out.code = kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact formal group law and Chern number computations in complex cobordism", "cobord"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  std::optional<int> max_degree;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", max_degree, "Truncation degree (default $FGL_MAX_DEGREE or 8)");

  int ai = 0, aj = 0;
  auto* alpha = app.add_subcommand("alpha", "Coefficient alpha_ij of the universal law");
  alpha->add_option("i", ai)->required();
  alpha->add_option("j", aj)->required();

  std::string klass, omega, klass_b, family = "all", law = "universal", p, suite = "all", ideal_name = "abel", member;
  std::vector<std::string> gens;
  auto* chern = app.add_subcommand("chern", "Chern numbers of a class");
  chern->add_option("--class", klass, "Class expression")->required();
  chern->add_option("--omega", omega, "Partition such as 1,1");
  auto* snumber = app.add_subcommand("snumber", "s-number of a homogeneous class");
  snumber->add_option("--class", klass)->required();
  auto* boundary = app.add_subcommand("boundary", "Class dual to c_1");
  boundary->add_option("--class", klass)->required();
  auto* star = app.add_subcommand("star", "Star product of two classes in W");
  star->add_option("--a", klass)->required();
  star->add_option("--b", klass_b)->required();
  auto* generators = app.add_subcommand("generators", "Generator families with certificates");
  generators->add_option("--family", family)->check(CLI::IsMember({"e", "z", "x", "y", "all"}));
  auto* abel = app.add_subcommand("abel", "Abel elimination");
  auto* buchstaber = app.add_subcommand("buchstaber", "Buchstaber elimination");
  auto* hoehn = app.add_subcommand("hoehn", "Krichever-Hoehn genus; generic unless --p is given");
  hoehn->add_option("--p", p, "p1,p2,p3,p4 as rationals");
  auto* krichever = app.add_subcommand("krichever-check", "Krichever form and parameters of a law");
  krichever->add_option("--law", law)->check(CLI::IsMember({"universal", "abel", "buchstaber", "additive", "hoehn"}));
  krichever->add_option("--p", p, "p1,p2,p3,p4 for --law hoehn");
  auto* phiw = app.add_subcommand("phiw", "Genus phi_W of a class in W");
  phiw->add_option("--class", klass)->required();
  auto* ideal = app.add_subcommand("ideal", "Graded dimensions of an ideal");
  ideal->add_option("--name", ideal_name)->check(CLI::IsMember({"abel", "buchstaber", "z", "tilde"}));
  ideal->add_option("--gen", gens, "Generator expression (repeatable)");
  ideal->add_option("--member", member, "Class to test for membership");
  auto* verify = app.add_subcommand("verify", "Verification suites");
  verify->add_option("--suite", suite)->check(CLI::IsMember(verify_suites()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Config config;
  try {
    config = Config::from_environment();
    if (max_degree) config.max_degree = Config::parse_degree(std::to_string(*max_degree));
  } catch (const ConfigError& e) {
    std::cerr << "cobord: " << e.what() << "\n";
    return kExitUsage;
  }

  Output out;
  out.as_json = format == "json";
  CLI::App* sub = app.get_subcommands().front();
  try {
    const Context ctx(config);
    if (sub == alpha) cmd_alpha(ctx, ai, aj, out);
    else if (sub == chern) cmd_chern(ctx, klass, omega, out);
    else if (sub == snumber) cmd_snumber(ctx, klass, out);
    else if (sub == boundary) cmd_boundary(ctx, klass, out);
    else if (sub == star) cmd_star(ctx, klass, klass_b, out);
    else if (sub == generators) cmd_generators(ctx, family, out);
    else if (sub == abel) cmd_abel(ctx, out);
    else if (sub == buchstaber) cmd_buchstaber(ctx, out);
    else if (sub == hoehn) cmd_hoehn(ctx, p, out);
    else if (sub == krichever) cmd_krichever(ctx, law, p, out);
    else if (sub == phiw) cmd_phiw(ctx, klass, out);
    else if (sub == ideal) cmd_ideal(ctx, ideal_name, gens, member, out);
    else if (sub == verify) cmd_verify(ctx, suite, out);
  } catch (const ConfigError& e) {
    std::cerr << "cobord: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "cobord: " << e.what() << "\n";
    return kExitDomain;
  }

  if (out.as_json) {
    std::cout << json::envelope(sub->get_name(), out.result).dump(2) << "\n";
  } else {
    std::cout << out.text.str();
  }
  return out.code;
}
