#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "elg/io.hpp"
#include "elg/tolerances.hpp"

namespace elg {

struct CheckResult {
  std::string name;
  std::string description;
  int samples = 0;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  Json details = Json::object();
};

struct VerifyReport {
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<CheckResult> checks;

  bool passed() const;
  Json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 42;
  int samples = 200;
  Tolerances tol;
  /// Per-check tolerance by check name; the key "all" applies to every check.
  std::map<std::string, double> tolerance_overrides;
};

/// Names of all checks, in report order.
const std::vector<std::string>& verify_check_names();

/// Runs every property check. Each check draws from its own sampler seeded
/// from (seed, check position), so one check's sample count does not shift
/// another's draws.
VerifyReport verify_suite(const VerifyOptions& options);

}  // namespace elg
