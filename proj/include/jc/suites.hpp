// Verification suites shared by the command-line tool and the acceptance runner.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jc {

struct SuiteConfig {
  std::string suite = "all";
  std::vector<std::string> algebras;  // empty: the suite's default list
  int max_degree = 3;
  std::uint64_t seed = 1;
  double tolerance = 1e-4;  // numeric checks only; exact checks ignore it
  int jobs = 1;
};

// "noted": a recorded discrepancy between a displayed formula and its derivation; not a failure
enum class CheckStatus { pass, fail, noted };

struct CheckRecord {
  std::string id;
  std::string anchor;
  CheckStatus status = CheckStatus::pass;
  double residual = 0;
  double millis = 0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  int count(CheckStatus s) const;
  bool passed() const { return count(CheckStatus::fail) == 0; }
};

const std::vector<std::string>& suite_names();  // without "all"
// throws ConfigError (bad suite, algebra not usable by the suite), UnsupportedKind, ResourceLimit
SuiteReport run_suite(const SuiteConfig& cfg);

std::string status_name(CheckStatus s);
// stable key order; with_timing = false drops the millis fields
std::string report_json(const SuiteReport& r, bool with_timing = true);

}  // namespace jc
