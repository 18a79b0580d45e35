#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elg/cli.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw elg::SchemaError("cannot open input file \"" + path + "\"");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int emit(const elg::Json& j, const std::string& path, int indent, int code) {
  const std::string text = j.dump(indent) + "\n";
  if (path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot open output file \"" << path << "\"\n";
      return elg::kExitSchema;
    }
    out << text;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended Lorentz group calculator"};
  std::string command;
  std::string input;
  std::string output = "-";
  std::uint64_t seed = 0;
  int samples = 0;
  std::vector<std::string> overrides;
  int indent = 2;

  app.add_option("command", command,
                 "exp, compose, inverse, factorize, oplus, theta, constants, gauge or verify");
  app.add_option("--input", input, "job JSON file, or - for standard input");
  app.add_option("--output", output, "result file, or - for standard output");
  auto* seed_opt = app.add_option("--seed", seed, "RNG seed for verify (default 42)");
  auto* samples_opt = app.add_option("--samples", samples, "draws per verify check (default 200)")
                          ->check(CLI::PositiveNumber);
  app.add_option("--tol-override", overrides, "NAME=VALUE, repeatable");
  app.add_option("--json-indent", indent, "spaces per indent level; -1 for compact output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return elg::kExitSchema;
  }

  elg::JobSpec job;
  try {
    elg::Json job_json = elg::Json::object();
    if (!input.empty()) job_json = elg::Json::parse(read_all(input));
    if (!job_json.is_object()) throw elg::SchemaError("job: expected an object");
    if (!command.empty()) {
      if (job_json.contains("command") && job_json["command"] != command) {
        throw elg::SchemaError("command argument conflicts with the job file");
      }
      job_json["command"] = command;
    }
    job = elg::JobSpec::from_json(job_json);
    if (seed_opt->count() > 0) job.seed = seed;
    if (samples_opt->count() > 0) job.samples = samples;
    for (const std::string& o : overrides) {
      const auto eq = o.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw elg::SchemaError("--tol-override expects NAME=VALUE, got \"" + o + "\"");
      }
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(o.substr(eq + 1), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != o.size() - eq - 1) {
        throw elg::SchemaError("--tol-override: bad value in \"" + o + "\"");
      }
      job.tolerances[o.substr(0, eq)] = value;
    }
  } catch (const std::exception& e) {
    const elg::Json err{{"error", {{"type", "schema"}, {"message", e.what()}}}};
    return emit(err, output, indent, elg::kExitSchema);
  }

  const elg::RunResult result = elg::run(job);
  return emit(result.output, output, indent, result.exit_code);
}
