#include "elg/cli.hpp"

#include <array>
#include <cmath>

#include "elg/core_algebra.hpp"
#include "elg/extended.hpp"
#include "elg/gauge.hpp"
#include "elg/structure.hpp"
#include "elg/verify.hpp"

namespace elg {

namespace {

constexpr std::array<std::pair<Command, const char*>, 9> kCommands = {{
    {Command::Exp, "exp"},
    {Command::Compose, "compose"},
    {Command::Inverse, "inverse"},
    {Command::Factorize, "factorize"},
    {Command::OPlus, "oplus"},
    {Command::Theta, "theta"},
    {Command::Constants, "constants"},
    {Command::Gauge, "gauge"},
    {Command::Verify, "verify"},
}};

// Returns false for names that are not library tolerances.
bool apply_library_tolerance(Tolerances& tol, const std::string& name, double value) {
  if (name == "lin") tol.lin = value;
  else if (name == "det") tol.det = value;
  else if (name == "param") tol.param = value;
  else if (name == "fact") tol.fact = value;
  else if (name == "null") tol.null = value;
  else if (name == "group") tol.group = value;
  else if (name == "chart") tol.chart = value;
  else if (name == "fd") tol.fd = value;
  else if (name == "h_fd") tol.h_fd = value;
  else if (name == "cond_max") tol.cond_max = value;
  else if (name == "max_iter") tol.max_iter = static_cast<int>(value);
  else if (name == "max_restarts") tol.max_restarts = static_cast<int>(value);
  else return false;
  return true;
}

const Json& member(const Json& inputs, const char* key) {
  if (!inputs.is_object() || !inputs.contains(key)) {
    throw SchemaError(std::string("inputs: missing \"") + key + "\"");
  }
  return inputs[key];
}

// Accepts {"params": P} or P itself.
ExtendedParams params_input(const Json& inputs) {
  if (inputs.is_object() && inputs.contains("params")) return params_from_json(inputs["params"]);
  return params_from_json(inputs);
}

std::string method_input(const Json& inputs) {
  if (!inputs.is_object() || !inputs.contains("method")) return "closed";
  const Json& m = inputs["method"];
  if (!m.is_string() || (m != "closed" && m != "numeric")) {
    throw SchemaError("inputs.method: expected \"closed\" or \"numeric\"");
  }
  return m.get<std::string>();
}

Json generator_names() {
  Json names = Json::array();
  for (Generator g : kAllGenerators) names.push_back(std::string(name_of(g)));
  return names;
}

Json run_exp(const JobSpec& job, const Tolerances& tol) {
  const ExtendedParams p = params_input(job.inputs);
  const Matrix4C m = extended_matrix(p);
  return Json{{"params", params_to_json(p)},
              {"matrix", matrix_to_json(m)},
              {"determinant", complex_to_json(m.determinant())},
              {"dirac_branch", to_string(p.dirac.branch(tol.null))},
              {"group_defect", group_defect(m)}};
}

Json run_compose(const JobSpec& job, const Tolerances& tol) {
  const ExtendedParams p2 = params_from_json(member(job.inputs, "p2"));
  const ExtendedParams p1 = params_from_json(member(job.inputs, "p1"));
  const ExtendedParams r = compose_extended(p2, p1, tol);
  const double gap = (extended_matrix(r) - extended_matrix(p2) * extended_matrix(p1)).norm();
  return Json{{"result", params_to_json(r)}, {"matrix_residual", gap}};
}

Json run_inverse(const JobSpec& job) {
  const ExtendedParams p = params_input(job.inputs);
  return Json{{"result", params_to_json(inverse_extended(p))}};
}

Json run_factorize(const JobSpec& job, const Tolerances& tol) {
  const Matrix4C m = matrix4c_from_json(member(job.inputs, "matrix"));
  const FactorizationReport f = factorize_wlr(m, tol);
  return Json{{"params", params_to_json(f.params)},
              {"residual", f.residual},
              {"iterations", f.iterations},
              {"seed_quality", f.seed_quality},
              {"chart_discriminant", chart_discriminant(m)}};
}

Json run_oplus(const JobSpec& job) {
  const ExtendedParams p = params_input(job.inputs);
  const std::string method = method_input(job.inputs);
  const Matrix10 o = method == "closed" ? oplus_closed(p) : oplus_numeric(p);
  return Json{{"params", params_to_json(p)},
              {"method", method},
              {"generators", generator_names()},
              {"matrix", matrix_to_json(o)}};
}

Json run_theta(const JobSpec& job, const Tolerances& tol) {
  const ExtendedParams p = params_input(job.inputs);
  const std::string method = method_input(job.inputs);
  const Matrix10 th = method == "closed" ? theta_closed(p) : theta_numeric(p, tol.h_fd, false, tol);
  return Json{{"params", params_to_json(p)},
              {"method", method},
              {"generators", generator_names()},
              {"matrix", matrix_to_json(th)},
              {"condition_number", condition_number(th)}};
}

Json run_constants(const Tolerances& tol) {
  const StructureConstants c = structure_constants(tol);
  Json entries = Json::array();
  for (int r = 0; r < 10; ++r) {
    for (int s = 0; s < 10; ++s) {
      for (int m = 0; m < 10; ++m) {
        if (c(r, s, m) == 0.0) continue;
        entries.push_back(Json{{"r", std::string(name_of(kAllGenerators[r]))},
                               {"s", std::string(name_of(kAllGenerators[s]))},
                               {"m", std::string(name_of(kAllGenerators[m]))},
                               {"c", c(r, s, m)}});
      }
    }
  }
  return Json{{"convention", "[X_r, X_s] = -i c_rs^m X_m"},
              {"nonzero", entries},
              {"route_gap", c.max_abs_difference(structure_constants_theta())},
              {"antisymmetry_defect", c.antisymmetry_defect()},
              {"jacobi_defect", c.jacobi_defect()}};
}

Json run_gauge(const JobSpec& job, const Tolerances& tol) {
  const FieldGrid grid = grid_from_json(member(job.inputs, "grid"));
  std::optional<SiteConnection> background;
  if (job.inputs.contains("background")) {
    background = connection_from_json(job.inputs["background"]);
  }
  const GaugeField a = pure_gauge_component(grid, background, tol);
  Json out{{"connection", gauge_to_json(a)}};
  if (job.inputs.contains("delta")) {
    const Json& d = job.inputs["delta"];
    if (!d.is_array() || d.size() != grid.values.size()) {
      throw SchemaError("inputs.delta: expected one 10-vector per site");
    }
    std::vector<Vector10> delta;
    for (const auto& v : d) delta.push_back(vector10_from_json(v));
    out["increment"] = gauge_to_json(infinitesimal_gauge_delta(a, delta, structure_constants(tol)));
  }
  return out;
}

Json error_object(const char* type, const std::string& message) {
  return Json{{"error", Json{{"type", type}, {"message", message}}}};
}

}  // namespace

const char* to_string(Command c) noexcept {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "unknown";
}

std::optional<Command> parse_command(const std::string& name) {
  for (const auto& [cmd, n] : kCommands) {
    if (name == n) return cmd;
  }
  return std::nullopt;
}

JobSpec JobSpec::from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("job: expected an object");
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    if (k != "command" && k != "inputs" && k != "tolerances" && k != "seed" && k != "samples") {
      throw SchemaError("job: unknown member \"" + k + "\"");
    }
  }
  JobSpec job;
  if (!j.contains("command") || !j["command"].is_string()) {
    throw SchemaError("job: \"command\" must be a string");
  }
  const auto cmd = parse_command(j["command"].get<std::string>());
  if (!cmd) throw SchemaError("job: unknown command \"" + j["command"].get<std::string>() + "\"");
  job.command = *cmd;
  if (j.contains("inputs")) job.inputs = j["inputs"];
  if (j.contains("tolerances")) {
    if (!j["tolerances"].is_object()) throw SchemaError("job.tolerances: expected an object");
    for (const auto& item : j["tolerances"].items()) {
      if (!item.value().is_number()) throw SchemaError("job.tolerances: values must be numbers");
      job.tolerances[item.key()] = item.value().get<double>();
    }
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw SchemaError("job.seed: expected a non-negative integer");
    job.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("samples")) {
    if (!j["samples"].is_number_integer() || j["samples"].get<long long>() < 1) {
      throw SchemaError("job.samples: expected a positive integer");
    }
    job.samples = j["samples"].get<int>();
  }
  return job;
}

RunResult run(const JobSpec& job) {
  RunResult result;
  try {
    Tolerances tol;
    std::map<std::string, double> check_overrides;
    for (const auto& [name, value] : job.tolerances) {
      if (!std::isfinite(value)) throw SchemaError("tolerance \"" + name + "\" is not finite");
      if (!apply_library_tolerance(tol, name, value)) check_overrides[name] = value;
    }
    if (job.command != Command::Verify && !check_overrides.empty()) {
      throw SchemaError("unknown tolerance \"" + check_overrides.begin()->first + "\"");
    }

    Json body;
    switch (job.command) {
      case Command::Exp: body = run_exp(job, tol); break;
      case Command::Compose: body = run_compose(job, tol); break;
      case Command::Inverse: body = run_inverse(job); break;
      case Command::Factorize: body = run_factorize(job, tol); break;
      case Command::OPlus: body = run_oplus(job); break;
      case Command::Theta: body = run_theta(job, tol); break;
      case Command::Constants: body = run_constants(tol); break;
      case Command::Gauge: body = run_gauge(job, tol); break;
      case Command::Verify: {
        VerifyOptions options;
        options.seed = job.seed;
        options.samples = job.samples;
        options.tol = tol;
        options.tolerance_overrides = check_overrides;
        const VerifyReport report = verify_suite(options);
        body = report.to_json();
        if (!report.passed()) result.exit_code = kExitVerification;
        break;
      }
    }
    result.output = Json{{"command", to_string(job.command)}, {"result", body}};
  } catch (const SchemaError& e) {
    result.exit_code = kExitSchema;
    result.output = error_object("schema", e.what());
  } catch (const DomainError& e) {
    result.exit_code = kExitSchema;
    result.output = error_object("domain", e.what());
  } catch (const SolverError& e) {
    result.exit_code = kExitSolver;
    result.output = error_object("solver", e.what());
    result.output["error"]["kind"] = to_string(e.kind());
    result.output["error"]["best_residual"] = e.best_residual();
  } catch (const nlohmann::json::exception& e) {
    result.exit_code = kExitSchema;
    result.output = error_object("schema", e.what());
  }
  return result;
}

}  // namespace elg
