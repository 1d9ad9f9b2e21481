#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace tribwords {

enum class Profile { Desk, Deep };

Profile parse_profile(std::string_view name);
std::string_view to_string(Profile profile);

struct CheckResult {
  std::string id;         // C01 .. C10, one per acceptance criterion
  std::string claim;      // the statement being checked
  nlohmann::json params;
  bool pass = false;
  nlohmann::json detail;  // witnesses and worst-case slack
  double seconds = 0.0;   // wall time, reported only on request
};

struct VerificationSuiteResult {
  Profile profile = Profile::Desk;
  std::vector<CheckResult> checks;  // ordered by id

  bool pass() const;
  nlohmann::json to_json(bool with_timings = false) const;
};

/// Worker cap from TRIBWORDS_THREADS (default: hardware concurrency, at least 1).
unsigned worker_count();

/// Runs every check; independent checks share up to `threads` workers, the
/// timing-sensitive performance check runs alone afterwards.
VerificationSuiteResult run_suite(Profile profile, unsigned threads);

} // namespace tribwords
