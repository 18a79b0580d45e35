#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "elg/cli.hpp"
#include "elg/io.hpp"
#include "elg/sampling.hpp"
#include "elg/verify.hpp"

using namespace elg;

namespace {

RunResult run_json(const Json& j) { return run(JobSpec::from_json(j)); }

}  // namespace

TEST_CASE("params survive a JSON text round trip bit for bit") {
  ParamSampler s(501);
  for (int i = 0; i < 200; ++i) {
    const ExtendedParams p = s.extended();
    const ExtendedParams q = params_from_json(Json::parse(params_to_json(p).dump()));
    CHECK(q.coordinates() == p.coordinates());
  }
}

TEST_CASE("params schema") {
  CHECK(params_from_json("identity").coordinates() == Vector10::Zero());
  const ExtendedParams p = params_from_json(Json::parse(R"({"u": [0.5, 0, 0]})"));
  CHECK(p.boost.u(0) == 0.5);
  CHECK(p.dirac.omega == Vector4::Zero());
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"w": [0,0,0,0]})")), SchemaError);
  CHECK_THROWS_AS(params_from_json(Json::parse(R"({"u": [0, 0]})")), SchemaError);
  CHECK_THROWS_AS(params_from_json(Json::parse("3")), SchemaError);
}

TEST_CASE("matrices serialize row-major with [re, im] entries") {
  Matrix4C m = Matrix4C::Zero();
  m(0, 1) = Complex(1.5, -2.0);
  const Json j = matrix_to_json(m);
  CHECK(j[0][1][0] == 1.5);
  CHECK(j[0][1][1] == -2.0);
  CHECK(matrix4c_from_json(j) == m);
}

TEST_CASE("compose of identities is the identity") {
  const RunResult r = run_json(Json::parse(
      R"({"command": "compose", "inputs": {"p2": "identity", "p1": "identity"}})"));
  CHECK(r.exit_code == kExitOk);
  CHECK(params_from_json(r.output["result"]["result"]).coordinates() == Vector10::Zero());
}

TEST_CASE("oplus of a quarter turn about z") {
  Json job = Json::parse(R"({"command": "oplus", "inputs": {"theta": [0, 0, 0]}})");
  job["inputs"]["theta"][2] = std::numbers::pi / 2.0;
  const RunResult r = run_json(job);
  REQUIRE(r.exit_code == kExitOk);
  const Json& m = r.output["result"]["matrix"];
  CHECK(m.size() == 10);
  CHECK(m[2][2].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(m[0][0].get<double>()) < 1e-15);
  CHECK(std::abs(std::abs(m[0][1].get<double>()) - 1.0) < 1e-15);
  CHECK(m[0][1].get<double>() == doctest::Approx(-m[1][0].get<double>()));
}

TEST_CASE("exit codes") {
  CHECK(run_json(Json::parse(R"({"command": "exp", "inputs": {"u": [1, 2]}})")).exit_code ==
        kExitSchema);
  CHECK_THROWS_AS(JobSpec::from_json(Json::parse(R"({"command": "nope"})")), SchemaError);
  CHECK_THROWS_AS(JobSpec::from_json(Json::parse(R"({"command": "exp", "extra": 1})")),
                  SchemaError);

  Json bad = Json::parse(R"({"command": "factorize", "inputs": {}})");
  Json rows = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json row = Json::array();
    for (int j = 0; j < 4; ++j) row.push_back(Json::array({i == j ? 1.0 : 0.0, 0.0}));
    rows.push_back(row);
  }
  rows[0][1] = Json::array({0.4, 0.0});
  bad["inputs"]["matrix"] = rows;
  const RunResult r = run_json(bad);
  CHECK(r.exit_code == kExitSolver);
  CHECK(r.output["error"]["kind"] == "not_in_group");

  const RunResult unknown = run_json(Json::parse(
      R"({"command": "exp", "inputs": "identity", "tolerances": {"bogus": 1}})"));
  CHECK(unknown.exit_code == kExitSchema);
}

TEST_CASE("verify is deterministic and its checks are live") {
  const Json job = Json::parse(R"({"command": "verify", "seed": 7, "samples": 1})");
  const RunResult a = run_json(job);
  const RunResult b = run_json(job);
  CHECK(a.exit_code == kExitOk);
  CHECK(a.output.dump() == b.output.dump());
  CHECK(a.output["result"]["checks"].size() == verify_check_names().size());

  Json strict = job;
  strict["tolerances"] = Json{{"all", 1e-30}};
  const RunResult c = run_json(strict);
  CHECK(c.exit_code == kExitVerification);
  CHECK(c.output["result"]["passed"] == false);
}

TEST_CASE("command names") {
  for (const char* n : {"exp", "compose", "inverse", "factorize", "oplus", "theta", "constants",
                        "gauge", "verify"}) {
    REQUIRE(parse_command(n).has_value());
    CHECK(std::string(to_string(*parse_command(n))) == n);
  }
  CHECK_FALSE(parse_command("EXP").has_value());
}
