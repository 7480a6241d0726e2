#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace pfg {

struct Grid {
  std::vector<int> f{4, 5};
  std::vector<std::uint32_t> chars{0, 32003};  // 0 means the rationals
  std::uint64_t seed = 0;
};

enum class Verdict { pass, fail, skipped };
std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

struct CheckResult {
  std::string id;
  std::string anchor;
  Verdict verdict = Verdict::fail;
  std::string detail;
  double seconds = 0;
};

struct SuiteReport {
  std::string suite;
  Grid grid;
  std::vector<CheckResult> checks;  // sorted by id, whatever the completion order

  bool passed() const;
  bool incomplete() const;
  std::string status() const;  // "pass", "fail" or "incomplete"
  int exit_code() const;       // 0 pass, 1 fail, 2 incomplete
};

struct RunOptions {
  double budget_seconds = 900;
  unsigned threads = 0;  // 0: hardware concurrency
  int identity_trials_prime = 100;
  int identity_trials_rational = 20;
};

/// A registered check before execution.
struct CheckSpec {
  std::string id;
  std::string anchor;
  std::function<std::pair<bool, std::string>(std::uint64_t seed)> run;
};

const std::vector<std::string>& suite_names();
std::string suite_description(const std::string& name);

/// Checks of a suite for a grid in execution order.  Throws StructuralError on an unknown suite.
std::vector<CheckSpec> suite_checks(const std::string& name, const Grid& grid, const RunOptions& opts = {});

SuiteReport run_checks(const std::string& suite, const Grid& grid, std::vector<CheckSpec> checks,
                       const RunOptions& opts = {});
SuiteReport run_suite(const std::string& name, const Grid& grid, const RunOptions& opts = {});

nlohmann::json to_json(const SuiteReport& r, bool timings = false);
SuiteReport report_from_json(const nlohmann::json& j);
std::string to_text(const SuiteReport& r, bool timings = false);

/// Seed of one check: FNV-1a of the id mixed with the run seed.
std::uint64_t check_seed(std::uint64_t seed, const std::string& id);

}  // namespace pfg
