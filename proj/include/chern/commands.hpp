#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "chern/formulas.hpp"
#include "chern/session.hpp"

namespace chern {

struct CommandOptions {
  unsigned nmax = 0;  // 0: default window
  std::uint64_t seed = 1;
  unsigned trials = 8;
  std::optional<std::vector<std::int64_t>> h;
  std::optional<bool> unmixed;
  std::optional<std::string> param;
};

/// Result of one command. Serialized as
/// {command, inputHash, values, checks[], citations[]}.
struct Report {
  std::string command;
  std::string input_hash;
  nlohmann::json values = nlohmann::json::object();
  std::vector<ReportCheck> checks;
  std::vector<std::string> citations;
  std::string text;  // human-readable table

  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// FNV-1a 64-bit hash of the input, as 16 hex digits.
std::string input_hash(std::string_view text);

/// Commands: coeffs, series, verdict, schenzel, mv, h0, depth.
/// Throws Error for diagnostics and InvariantViolation for broken invariants.
Report run_command(const SessionSpec& spec, const std::string& command, const CommandOptions& options,
                   std::string_view input_text);

/// Names of the commands that take a session file.
const std::vector<std::string>& session_commands();

struct SuiteResult {
  std::string id;     // "A".."D"
  std::string title;
  std::vector<ReportCheck> checks;
  bool passed() const;
};

/// Reproduces the worked examples with pinned expected values.
std::vector<SuiteResult> run_example_suites(std::uint64_t seed = 1);
Report example_suites_report(std::uint64_t seed = 1);

/// Session texts of the worked examples.
namespace example_sessions {
extern const char* const kFourVariable;
extern const char* const kOneDimensional;
extern const char* const kSixVariable;
extern const char* const kRegularPlane;
extern const char* const kNodeCurve;
}  // namespace example_sessions

}  // namespace chern
