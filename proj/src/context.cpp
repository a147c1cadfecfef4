#include "cobord/context.hpp"

#include <cstdlib>
#include <string>

#include "cobord/error.hpp"

namespace cobord {

int Config::parse_degree(std::string_view text) {
  int value = 0;
  if (text.empty() || text.size() > 3) throw ConfigError("invalid maximum degree '" + std::string(text) + "'");
  for (char c : text) {
    if (c < '0' || c > '9') throw ConfigError("invalid maximum degree '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  if (value < 1 || value > kMaxSupportedDegree)
    throw ConfigError("maximum degree must lie in 1.." + std::to_string(kMaxSupportedDegree));
  return value;
}

Config Config::from_environment() {
  Config c;
  if (const char* env = std::getenv("FGL_MAX_DEGREE"); env && *env) c.max_degree = parse_degree(env);
  return c;
}

Context::Context(Config config)
    : config_(config),
      chern_(config.max_degree),
      universal_(universal_fgl(config.max_degree)),
      factory_(universal_, chern_) {}

GradedPoly Context::star(const GradedPoly& a, const GradedPoly& b) const {
  return star_product(chern_, v_class(), a, b);
}

const std::vector<GeneratorRecord>& Context::w_generators() const {
  std::call_once(w_once_, [&] { w_ = factory_.w_generators(); });
  return w_;
}

std::map<int, GradedPoly> Context::w_generator_map() const {
  std::map<int, GradedPoly> out;
  for (const auto& r : w_generators()) out.emplace(r.degree, r.cls);
  return out;
}

const PhiW& Context::phi_w() const {
  std::call_once(phi_once_, [&] { phi_ = std::make_unique<PhiW>(chern_, v_class(), w_generator_map()); });
  return *phi_;
}

const Elimination& Context::abel() const {
  std::call_once(abel_once_, [&] { abel_ = abel_eliminate(universal_); });
  return *abel_;
}

const BuchstaberData& Context::buchstaber() const {
  std::call_once(buch_once_, [&] { buch_ = buchstaber_eliminate(universal_); });
  return *buch_;
}

GradedPoly evaluate_class(const Context& ctx, const ClassExpr& e) {
  if (!e.uses_w_generators()) return evaluate(e, ctx.cap());
  const auto gens = ctx.w_generator_map();
  GradedPoly out(ctx.cap());
  for (const auto& t : e.terms) {
    GradedPoly term(ctx.cap(), 1);
    for (const auto& f : t.factors) {
      if (f.kind != Factor::Kind::x) throw DomainError("a term mixes x<k> with CP<k> factors");
      if (f.index == 2) throw DomainError("there is no W-generator x2");
      if (f.index > ctx.cap()) throw RangeError("x" + std::to_string(f.index) + " exceeds the maximum degree");
      const GradedPoly& x = gens.at(f.index);
      for (int k = 0; k < f.exponent; ++k) term = ctx.star(term, x);
    }
    out += term * t.coefficient;
  }
  return out;
}

}  // namespace cobord
