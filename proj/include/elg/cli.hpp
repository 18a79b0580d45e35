#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "elg/io.hpp"
#include "elg/tolerances.hpp"

namespace elg {

enum class Command { Exp, Compose, Inverse, Factorize, OPlus, Theta, Constants, Gauge, Verify };

const char* to_string(Command c) noexcept;
std::optional<Command> parse_command(const std::string& name);

/// One CLI invocation. JSON form:
///   {"command": "...", "inputs": {...}, "tolerances": {"name": value},
///    "seed": N, "samples": N}
struct JobSpec {
  Command command = Command::Verify;
  Json inputs = Json::object();
  /// Library tolerances (lin, det, param, fact, null, group, chart, fd, h_fd,
  /// cond_max, max_iter, max_restarts) or verify check names / "all".
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 42;
  int samples = 200;

  static JobSpec from_json(const Json& j);
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitSchema = 2;
inline constexpr int kExitSolver = 3;
inline constexpr int kExitVerification = 4;

struct RunResult {
  int exit_code = kExitOk;
  Json output;
};

/// Executes a job. Never throws: failures become an {"error": {...}} object
/// with the matching exit code.
RunResult run(const JobSpec& job);

}  // namespace elg
