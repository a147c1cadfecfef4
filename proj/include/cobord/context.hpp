#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "cobord/chern.hpp"
#include "cobord/expr.hpp"
#include "cobord/fgl.hpp"
#include "cobord/generators.hpp"
#include "cobord/specializations.hpp"

namespace cobord {

inline constexpr int kDefaultMaxDegree = 8;
inline constexpr int kMaxSupportedDegree = 12;

struct Config {
  int max_degree = kDefaultMaxDegree;

  /// FGL_MAX_DEGREE if set, otherwise the default. Throws ConfigError on a
  /// malformed or out-of-range value.
  static Config from_environment();
  static int parse_degree(std::string_view text);
};

/// Everything derived from one truncation degree. Expensive pieces are built
/// on first use; the getters are safe to call from several threads.
class Context {
 public:
  explicit Context(Config config);
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  int cap() const { return config_.max_degree; }
  const ChernCalculus& chern() const { return chern_; }
  const FormalGroupLaw& universal() const { return universal_; }
  const GeneratorFactory& factory() const { return factory_; }
  /// [V] = α_12.
  GradedPoly v_class() const { return universal_.alpha(1, 2); }
  GradedPoly star(const GradedPoly& a, const GradedPoly& b) const;

  /// x_1, x_3, ..., x_cap.
  const std::vector<GeneratorRecord>& w_generators() const;
  std::map<int, GradedPoly> w_generator_map() const;
  const PhiW& phi_w() const;
  const Elimination& abel() const;
  /// Requires cap >= 5.
  const BuchstaberData& buchstaber() const;

 private:
  Config config_;
  ChernCalculus chern_;
  FormalGroupLaw universal_;
  GeneratorFactory factory_;

  mutable std::once_flag w_once_, phi_once_, abel_once_, buch_once_;
  mutable std::vector<GeneratorRecord> w_;
  mutable std::unique_ptr<PhiW> phi_;
  mutable std::optional<Elimination> abel_;
  mutable std::optional<BuchstaberData> buch_;
};

/// Evaluates CP/P expressions in the ring and x<k> products as star products
/// of the W-generators. A term may not mix the two kinds.
GradedPoly evaluate_class(const Context& ctx, const ClassExpr& e);

}  // namespace cobord
