#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orthoplex/document.hpp"
#include "orthoplex/simplex.hpp"

namespace orthoplex {

struct SuiteConfig {
  std::vector<std::string> suites{"all"};
  int samples = 100;
  std::uint64_t seed = 0;
  int d_min = 2;
  int d_max = 6;
  TolerancePolicy policy;
  bool timing = false;  // serialize wall time; otherwise elapsed_ms is 0
  // Replaces the incenter in every check that uses it. Only for mutation
  // tests of the harness itself.
  std::function<Sphere(const Simplex&)> incenter;
};

/// Throws InputError unless samples >= 1 and 2 <= d_min <= d_max <= 10.
void validate(const SuiteConfig& config);

/// "equivalences", "regularity", "euler", "rectangular", "parametrization".
const std::vector<std::string>& suite_names();

struct SuiteReport {
  std::string suite;
  bool pass = true;
  int samples = 0;
  int checks = 0;
  double max_residual = 0.0;               // worst residual of upper-bound checks
  std::optional<double> min_separation;    // smallest value of lower-bound checks
  std::optional<Json> counterexample;      // the first failing check
  std::int64_t elapsed_ms = 0;
};

struct VerificationReport {
  bool pass = true;
  std::uint64_t seed = 0;
  std::vector<SuiteReport> suites;
};

SuiteReport run_suite(const std::string& name, const SuiteConfig& config);

/// Runs config.suites in order ("all" expands to every suite). Throws
/// InputError on unknown names.
VerificationReport run_all(const SuiteConfig& config);

Json to_json(const SuiteReport& r, bool timing);
Json to_json(const VerificationReport& r, bool timing);

/// Re-evaluates the check recorded in a counterexample payload on its
/// serialized simplex and returns the residual.
double recheck(const Json& counterexample, const SuiteConfig& config = {});

}  // namespace orthoplex
