#pragma once

// Batch drivers behind the command-line tool. Each command takes a JSON
// configuration and produces one JSON report document:
//
//   { "schema_version": 1, "command": ..., "campaign": {...},
//     "reports": [InequalityReport...], "summary": RunSummary,
//     "extra": {...}, "timestamp": {"utc": ..., "wall_time_s": ...} }
//
// Everything outside "timestamp" is a deterministic function of the
// configuration.

#include <nlohmann/json.hpp>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hylab/inequalities.hpp"

namespace hylab {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr double kParsevalTolerance = 1e-10;

struct RunSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  double worst_ratio = 0.0;
  nlohmann::json worst_case;  // the offending or worst report, with provenance
  double wall_time_seconds = 0.0;
};

struct RunOutput {
  nlohmann::json document;
  RunSummary summary;
  bool all_pass() const { return summary.passed == summary.total; }
};

/// Commands: verify, parseval, weighted, extremal, padic-demo, grid-demo,
/// clarkson. Throws ValidationError for malformed configurations.
RunOutput run_command(std::string_view command, const nlohmann::json& config);

const std::vector<std::string>& command_names();

/// Flattens the reports of a document into CSV with columns
/// name,group,p,q,d,seed,lhs,rhs,constant,ratio,margin,pass.
std::string reports_to_csv(const nlohmann::json& document);

/// JSON form of a report; q = infinity is written as the string "inf".
nlohmann::json report_to_json(const InequalityReport& r);

/// Runs body(i) for i in [0, n) on a small worker pool.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hylab
