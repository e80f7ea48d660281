#pragma once

#include <string>
#include <vector>

#include "ttlab/config.hpp"

namespace ttlab {

struct SuiteResult {
  std::string name;
  Real tolerance = 0;
  /// Largest deviation over the instances that completed.
  Real max_deviation = 0;
  int instances = 0;
  int failed_instances = 0;
  /// The first few failures: instance index plus deviation or error text.
  Json diagnostics = Json::array();
  /// Suite-specific summary, e.g. empirical constants.
  Json extra = Json::object();

  bool passed() const { return failed_instances == 0 && instances > 0; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool passed() const;
};

/// Names of the suites run by run_verify, in order.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite. Each instance is guarded, so quadrature or check failures
/// become diagnostics instead of aborting the suite.
SuiteResult run_suite(const std::string& name, const RunConfig& cfg);

/// All suites, deterministic given the configuration.
VerifyReport run_verify(const RunConfig& cfg);

Json to_json(const SuiteResult& s);
/// The report together with the configuration that produced it.
Json to_json(const VerifyReport& r, const RunConfig& cfg);

}  // namespace ttlab
