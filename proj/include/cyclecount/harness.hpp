#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclecount/generators.hpp"
#include "cyclecount/json_io.hpp"

namespace cyclecount {

enum class TrialStatus { kPass, kFail, kInconclusive, kSkipped };

struct TrialOutcome {
  TrialStatus status = TrialStatus::kPass;
  std::string message;
  /// Counters summed into the report's stats.
  std::map<std::string, long> stats;
};

struct TrialFailure {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::string message;
  Json instance;
};

/// Result of one suite. `trials` counts checked instances; rejection
/// suites may make more `attempts` than that.
struct VerdictReport {
  std::string suite;
  TrialConfig config;
  std::size_t attempts = 0;
  std::size_t trials = 0;
  std::size_t passes = 0;
  std::size_t inconclusive = 0;
  std::vector<TrialFailure> failures;
  std::map<std::string, long> stats;
  double wall_seconds = 0.0;

  std::size_t failure_count() const { return failures.size(); }
  bool qualifying_met() const { return trials >= config.min_qualifying; }
  bool ok() const { return failures.empty() && qualifying_met(); }

  /// Everything except wall time is a deterministic function of the suite
  /// name and config.
  Json to_json(bool include_timing = true) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Default sizes per suite (trials, bounds, required minimum).
TrialConfig default_config(const std::string& suite);

/// Generates the instance for one trial, or nothing when the trial draws no
/// qualifying instance.
std::optional<Json> generate_instance(const std::string& suite, const TrialConfig& cfg,
                                      std::size_t trial, std::uint64_t seed);

/// Runs the suite's check on a serialized instance. Live trials go through
/// this same path, so dumped counterexamples replay exactly.
TrialOutcome check_instance(const std::string& suite, const Json& instance);

/// `jobs` = 0 uses the hardware concurrency. The report does not depend on
/// the number of jobs.
VerdictReport run_suite(const std::string& suite, const TrialConfig& cfg, unsigned jobs = 0);

}  // namespace cyclecount
