#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/context.hpp"
#include "cobord/json_io.hpp"

namespace cobord {

struct VerifyItem {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

/// A sign or normalization choice, with what was observed for it.
struct LedgerEntry {
  std::string topic;
  std::string observation;
  std::string status;
};

struct VerifyReport {
  int max_degree = 0;
  std::string suite;
  std::vector<VerifyItem> items;
  std::vector<LedgerEntry> ledger;

  bool pass() const;
  std::size_t failures() const;
};

const std::vector<std::string>& verify_suites();

/// Runs one suite or "all". Throws ConfigError for an unknown suite name.
VerifyReport run_verify(const Context& ctx, std::string_view suite);

/// +1 if a == b, -1 if a == -b, nullopt otherwise (a, b not both zero).
std::optional<int> relative_sign(const GradedPoly& a, const GradedPoly& b);

/// Conventions observed at the context's degree.
std::vector<LedgerEntry> convention_ledger(const Context& ctx);

std::string render_text(const VerifyReport& r);
json::Json render_json(const VerifyReport& r);

}  // namespace cobord
