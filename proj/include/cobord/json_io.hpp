#pragma once

#include <json.hpp>

#include "cobord/chern.hpp"
#include "cobord/fgl.hpp"
#include "cobord/generators.hpp"
#include "cobord/ideal.hpp"
#include "cobord/specializations.hpp"

namespace cobord::json {

using Json = nlohmann::ordered_json;

/// {"schema": "1", "command": ..., "result": ...}
Json envelope(const std::string& command, Json result);

Json rational(const Rational& q);
Json poly(const GradedPoly& p, std::string_view symbol = "P");
/// {"degree": n, "numbers": {"1,1": "8/1", ...}}
Json chern_vector(const ChernCalculus& chern, const ChernVector& v);
Json euclid(const EuclidCombo& c);
Json generator(const GeneratorRecord& r);
/// {"P3": "...", ...} for the assigned generators.
Json substitution(const Substitution& s);
Json elimination(const Elimination& e);
Json krichever(const KricheverReport& r, std::string_view symbol = "P");
Json krichever_params(const KricheverParams& r, std::string_view symbol = "P");
Json hoehn(const HoehnGenus& g);
Json graded_row(const GradedRow& r);
Json graded_report(const GradedReport& r);
Json comparison(const IdealComparison& c);

}  // namespace cobord::json
