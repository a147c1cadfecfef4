#include "cobord/json_io.hpp"

namespace cobord::json {

Json envelope(const std::string& command, Json result) {
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  j["result"] = std::move(result);
  return j;
}

Json rational(const Rational& q) { return to_fraction_string(q); }

Json poly(const GradedPoly& p, std::string_view symbol) { return p.to_string(symbol); }

Json chern_vector(const ChernCalculus& chern, const ChernVector& v) {
  Json numbers = Json::object();
  const auto& parts = chern.partitions_of(v.degree);
  for (std::size_t i = 0; i < parts.size(); ++i) numbers[partition_key(parts[i])] = rational(v.numbers[i]);
  return Json{{"degree", v.degree}, {"numbers", numbers}};
}

Json euclid(const EuclidCombo& c) {
  Json lambdas = Json::object();
  for (const auto& [i, l] : c.lambdas) lambdas[std::to_string(i)] = l.get_str();
  return Json{{"m", c.m},
              {"range", c.range == EuclidCombo::Range::full ? "full" : "inner"},
              {"lo", c.lo},
              {"hi", c.hi},
              {"lambdas", lambdas},
              {"gcd", c.gcd_value.get_str()},
              {"certificate", c.certificate()}};
}

Json generator(const GeneratorRecord& r) {
  Json j{{"name", r.name()},
         {"kind", to_string(r.kind)},
         {"degree", r.degree},
         {"class", poly(r.cls)},
         {"s_value", rational(r.s_value)},
         {"certificates",
          {{"w_member", r.certificates.w_member},
           {"su_member", r.certificates.su_member},
           {"novikov", r.certificates.novikov.pass},
           {"novikov_odd_part", r.certificates.novikov.odd_part.get_str()}}}};
  if (r.combo) j["euclid"] = euclid(*r.combo);
  return j;
}

Json substitution(const Substitution& s) {
  Json j = Json::object();
  for (int n = 1; n <= s.cap(); ++n)
    if (s.is_assigned(n)) j["P" + std::to_string(n)] = poly(s.image(n), s.target_symbol());
  return j;
}

Json elimination(const Elimination& e) {
  Json steps = Json::array();
  for (const auto& s : e.steps) {
    steps.push_back(Json{{"degree", s.degree},
                         {"pivot", Json::array({s.pivot.first, s.pivot.second})},
                         {"pivot_coefficient", rational(s.pivot_coefficient)},
                         {"image", poly(s.image)},
                         {"entries_checked", s.entries_checked}});
  }
  Json free = Json::array();
  for (int n = 1; n <= e.free_count; ++n) free.push_back("P" + std::to_string(n));
  return Json{{"free", free}, {"substitution", substitution(e.substitution)}, {"steps", steps}};
}

Json krichever(const KricheverReport& r, std::string_view symbol) {
  Json j{{"pass", r.pass}};
  if (!r.pass) {
    j["stage"] = r.stage;
    j["failing_degree"] = *r.failing_degree;
    j["index"] = Json::array({r.index->first, r.index->second});
    j["residual"] = poly(*r.residual, symbol);
  }
  return j;
}

Json krichever_params(const KricheverParams& r, std::string_view symbol) {
  Json p = Json::object();
  for (int i = 0; i < 4; ++i) p["p" + std::to_string(i + 1)] = poly(r.p[i], symbol);
  Json j{{"success", r.success}, {"p", p}};
  if (!r.success) {
    j["failing_order"] = *r.failing_order;
    j["residual"] = poly(*r.residual, symbol);
  }
  return j;
}

Json hoehn(const HoehnGenus& g) {
  Json p = Json::object();
  Json images = Json::object();
  if (g.graded_rational) {
    const auto q = g.rational_p();
    const auto im = g.rational_images();
    for (int i = 0; i < 4; ++i) p["p" + std::to_string(i + 1)] = rational(q[i]);
    for (std::size_t n = 0; n < im.size(); ++n) images["P" + std::to_string(n + 1)] = rational(im[n]);
  } else {
    for (int i = 0; i < 4; ++i) p["p" + std::to_string(i + 1)] = poly(g.p[i], g.symbol);
    for (std::size_t n = 0; n < g.images.size(); ++n) images["P" + std::to_string(n + 1)] = poly(g.images[n], g.symbol);
  }
  return Json{{"p", p}, {"images", images}, {"residual_zero", g.residual_zero}};
}

Json graded_row(const GradedRow& r) {
  Json j{{"degree", r.degree},
         {"ideal_dim", r.ideal_dim},
         {"ambient_dim", r.ambient_dim},
         {"quotient_dim", r.quotient_dim}};
  j["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
  j["pass"] = r.pass;
  return j;
}

Json graded_report(const GradedReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) rows.push_back(graded_row(row));
  Json j{{"name", r.name}, {"pass", r.pass()}, {"rows", rows}};
  if (auto f = r.first_failure()) j["first_failure"] = *f;
  return j;
}

Json comparison(const IdealComparison& c) {
  Json dims = Json::array();
  for (std::size_t n = 0; n < c.dims.size(); ++n)
    dims.push_back(Json{{"degree", n}, {"a", c.dims[n].first}, {"b", c.dims[n].second}});
  Json j{{"equal", c.equal}, {"dims", dims}, {"failures", c.failures}};
  if (c.first_failing_degree) j["first_failing_degree"] = *c.first_failing_degree;
  return j;
}

}  // namespace cobord::json
