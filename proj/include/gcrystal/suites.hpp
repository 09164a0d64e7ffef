#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcrystal/asymptotic.hpp"
#include "gcrystal/json_io.hpp"

namespace gcrystal {

struct IntRange {
  int lo;
  int hi;
};

/// One verification run. Unset ranges and trials fall back to the suite's
/// defaults; identical configs produce byte-identical reports.
struct SuiteConfig {
  std::string suite = "all";
  std::optional<IntRange> n;
  std::optional<IntRange> m;
  std::uint64_t seed = 1;
  std::optional<int> trials;
  double tol = kDefaultLimitTolerance;

  /// Throws SchemaError on an unknown suite, n < 2, m < 1, empty ranges or
  /// non-positive trials.
  void validate() const;
};

struct CaseResult {
  std::string key;
  std::string identity;
  long checks = 0;
  long failures = 0;
  std::vector<json> reproducers;  // at most a few, for failing checks

  bool passed() const { return failures == 0 && checks > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;  // sorted by key

  bool passed() const;
  json to_json() const;
};

const std::vector<std::string>& suite_names();

SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace gcrystal
