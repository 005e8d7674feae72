// Command-line surface: subcommand grammar, exit codes, JSON report shape,
// determinism of reports, and the numeric payload parser.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "p3lab/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = p3lab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json report_of(const RunResult& r) { return json::parse(r.out); }

int count_status(const json& rep, const std::string& status) {
  int n = 0;
  for (const auto& c : rep["checks"])
    if (c["status"] == status) ++n;
  return n;
}

bool has_check(const json& rep, const std::string& name) {
  for (const auto& c : rep["checks"])
    if (c["name"] == name) return true;
  return false;
}

const std::string kAlg1Params = "[0.25, 0, 0, 0.25, 0, 0, 0.25]";
const std::string kAlg1Initial = "[1, 0, 1, -0.125, 1, 0]";

}  // namespace

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).exit_code == 2);
  CHECK(run({"frobnicate"}).exit_code == 2);
  CHECK(run({"verify"}).exit_code == 2);
  CHECK(run({"verify", "relations"}).exit_code == 2);  // missing --system
  CHECK(run({"verify", "relations", "--system", "e8"}).exit_code == 2);
  CHECK(run({"verify", "symmetry", "--system", "d6", "--map", "zz"})
            .exit_code == 2);
  CHECK(run({"verify", "confluence", "--which", "bogus"}).exit_code == 2);
  CHECK(run({"verify", "solutions", "--id", "nope"}).exit_code == 2);
  // Numeric payload problems.
  CHECK(run({"integrate", "--system", "d6", "--params", "[oops",
             "--initial", kAlg1Initial, "--t0", "1", "--t1", "2"})
            .exit_code == 2);
  CHECK(run({"integrate", "--system", "d6", "--params", kAlg1Params,
             "--initial", "[1, 0, 1]", "--t0", "1", "--t1", "2"})
            .exit_code == 2);
  CHECK(run({"integrate", "--system", "d6", "--params", kAlg1Params,
             "--initial", kAlg1Initial, "--t0", "-1", "--t1", "2"})
            .exit_code == 2);  // path would cross t = 0
  CHECK(run({"integrate", "--system", "d6", "--params", kAlg1Params,
             "--initial", kAlg1Initial, "--t0", "1", "--t1", "2", "--tol",
             "0"})
            .exit_code == 2);
  // Fraction strings are rejected unless --rational is given.
  CHECK(run({"integrate", "--system", "d6", "--params",
             R"(["1/4", 0, 0, "1/4", 0, 0, "1/4"])", "--initial",
             kAlg1Initial, "--t0", "1", "--t1", "1.1"})
            .exit_code == 2);
  CHECK(run({"commute", "--system", "d6", "--map", "zz", "--params",
             kAlg1Params, "--initial", kAlg1Initial, "--t0", "1", "--t1",
             "2"})
            .exit_code == 2);
}

TEST_CASE("help is not an error") {
  const RunResult r = run({"--help"});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("verify integrals: report shape and summary") {
  const RunResult r = run({"verify", "integrals"});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(rep["schema"] == 1);
  CHECK(rep["command"] == "verify integrals");
  REQUIRE(rep["checks"].size() == 5);
  CHECK(count_status(rep, "pass") == 5);
  CHECK(rep["summary"]["fail"] == 0);
  for (int k = 1; k <= 5; ++k) CHECK(has_check(rep, "I" + std::to_string(k)));
  // The human-readable table goes to stderr.
  CHECK(r.err.find("pass") != std::string::npos);
}

TEST_CASE("verify translations --system d6 yields the six stated shifts") {
  const RunResult r = run({"verify", "translations", "--system", "d6"});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(count_status(rep, "pass") == 6);
  CHECK(count_status(rep, "fail") == 0);
  for (const char* name : {"T1", "T2", "T3", "T4", "T5", "T6"})
    CHECK(has_check(rep, name));
  CHECK(has_check(rep, "pairwise-commutation"));
}

TEST_CASE("verify charts --system d52 yields five pass records") {
  const RunResult r = run({"verify", "charts", "--system", "d52"});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(rep["checks"].size() == 5);
  CHECK(count_status(rep, "pass") == 5);
}

TEST_CASE("verify charts --system d6 includes the uncorrected-target control") {
  const RunResult r = run({"verify", "charts", "--system", "d6"});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(rep["checks"].size() == 8);  // seven charts plus the control
  CHECK(count_status(rep, "fail") == 0);
  CHECK(has_check(rep, "r6-uncorrected-control"));
}

TEST_CASE("verify solutions --id d6_fixed passes and checks the fixed point") {
  const RunResult r = run({"verify", "solutions", "--id", "d6_fixed"});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(count_status(rep, "pass") == 2);
  CHECK(has_check(rep, "d6_fixed"));
  CHECK(has_check(rep, "pi1-fixed-point"));
}

TEST_CASE("verify solutions (all ids) passes") {
  const RunResult r = run({"verify", "solutions"});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(count_status(rep, "fail") == 0);
  for (const char* name : {"d6_fixed", "d6_alg1", "d6_alg2", "d52_alg"})
    CHECK(has_check(rep, name));
}

TEST_CASE("verify confluence subcommands pass") {
  for (const char* which : {"d6-b5", "d6-d52", "b5-d51", "tr", "uv"}) {
    CAPTURE(which);
    const RunResult r = run({"verify", "confluence", "--which", which});
    REQUIRE(r.exit_code == 0);
    const json rep = report_of(r);
    CHECK(count_status(rep, "fail") == 0);
    CHECK(rep["checks"].size() >= 7);
  }
  const json tr =
      report_of(run({"verify", "confluence", "--which", "tr"}));
  CHECK(has_check(tr, "tr1-identity"));
  CHECK(has_check(tr, "integral-scalings"));
  const json uv =
      report_of(run({"verify", "confluence", "--which", "uv"}));
  CHECK(has_check(uv, "scalar-reduction"));
  CHECK(has_check(uv, "a1-symmetry(sigma)"));
}

TEST_CASE("reports are byte-identical across runs modulo wall time") {
  auto strip = [](json rep) {
    for (auto& c : rep["checks"]) c["wall_ms"] = 0.0;
    return rep.dump();
  };
  const std::vector<std::vector<std::string>> cmds = {
      {"verify", "translations", "--system", "d6"},
      {"verify", "integrals"},
      {"verify", "confluence", "--which", "tr"},
  };
  for (const auto& cmd : cmds) {
    const std::string a = strip(report_of(run(cmd)));
    const std::string b = strip(report_of(run(cmd)));
    CHECK(a == b);
  }
}

TEST_CASE("integrate writes CSV to stdout by default") {
  const RunResult r = run({"integrate", "--system", "d6", "--params",
                           kAlg1Params, "--initial", kAlg1Initial, "--t0",
                           "1", "--t1", "1.2"});
  REQUIRE(r.exit_code == 0);
  const std::string header =
      "t, x_re, x_im, y_re, y_im, z_re, z_im, w_re, w_im, q_re, q_im, p_re, "
      "p_im\n";
  CHECK(r.out.substr(0, header.size()) == header);
  CHECK(r.err.find("recorded") != std::string::npos);
}

TEST_CASE("integrate --out writes the CSV file and reports JSON on stdout") {
  const std::string path = "cli_test_trajectory.csv";
  const RunResult r = run({"integrate", "--system", "d6", "--params",
                           kAlg1Params, "--initial", kAlg1Initial, "--t0",
                           "1", "--t1", "1.2", "--out", path});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(rep["schema"] == 1);
  CHECK(count_status(rep, "recorded") == 1);
  std::ifstream f(path);
  REQUIRE(f.good());
  std::string first_line;
  std::getline(f, first_line);
  CHECK(first_line.find("t, x_re") == 0);
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("integrate accepts exact fraction strings with --rational") {
  const RunResult r =
      run({"integrate", "--system", "d6", "--params",
           R"(["1/4", 0, 0, "1/4", 0, 0, "1/4"])", "--initial",
           R"([1, 0, 1, ["-1/8", 0], 1, 0])", "--t0", "1", "--t1", "1.2",
           "--rational"});
  CHECK(r.exit_code == 0);
}

TEST_CASE("integrate reports a failure when the path starts at a pole") {
  // The flow has time in denominators; starting essentially at t = 0 trips
  // the pole guard immediately and the run exits with status 1.
  const RunResult r = run({"integrate", "--system", "d6", "--params",
                           kAlg1Params, "--initial", kAlg1Initial, "--t0",
                           "1e-12", "--t1", "1"});
  REQUIRE(r.exit_code == 1);
  const json rep = report_of(r);
  CHECK(count_status(rep, "fail") == 1);
}

TEST_CASE("commute passes for a reflection and for the identity map") {
  const std::string params = "[0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1]";
  const std::string initial = "[1.5, 0.25, 0.5, 1.2, [0.6666666666666666, 0], 0.8]";
  for (const char* map : {"s0", "id"}) {
    CAPTURE(map);
    const RunResult r =
        run({"commute", "--system", "d6", "--map", map, "--params", params,
             "--initial", initial, "--t0", "1", "--t1", "1.5"});
    REQUIRE(r.exit_code == 0);
    const json rep = report_of(r);
    CHECK(count_status(rep, "pass") == 1);
    CHECK(rep["checks"][0]["witness"].get<std::string>().find(
              "discrepancy") != std::string::npos);
  }
}

TEST_CASE("verify --out routes the report to a file") {
  const std::string path = "cli_test_report.json";
  const RunResult r = run({"verify", "integrals", "--out", path});
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  json rep;
  f >> rep;
  CHECK(rep["schema"] == 1);
  CHECK(rep["summary"]["fail"] == 0);
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("verify all covers every module and passes") {
  const RunResult r = run({"verify", "all"});
  REQUIRE(r.exit_code == 0);
  const json rep = report_of(r);
  CHECK(rep["system"] == "all");
  CHECK(count_status(rep, "fail") == 0);
  // Spot checks that each module's operations were exercised.
  CHECK(has_check(rep, "d6:involutions+braids"));
  CHECK(has_check(rep, "a1d7:involutions+braids"));
  CHECK(has_check(rep, "d6:symmetry(s0)"));
  CHECK(has_check(rep, "a1d7:symmetry(sigma)"));
  CHECK(has_check(rep, "d6:T1"));
  CHECK(has_check(rep, "d52:T4"));
  CHECK(has_check(rep, "d6:r6-uncorrected-control"));
  CHECK(has_check(rep, "d52:r3"));
  CHECK(has_check(rep, "d6-b5:limit(x)"));
  CHECK(has_check(rep, "d6-d52:constraint-image"));
  CHECK(has_check(rep, "b5-d51:symplectic"));
  CHECK(has_check(rep, "tr:tr5-identity"));
  CHECK(has_check(rep, "uv:scalar-reduction"));
  CHECK(has_check(rep, "solutions:d52_alg"));
  CHECK(has_check(rep, "solutions:pi1-fixed-point"));
  CHECK(has_check(rep, "integrals:I4"));
  CHECK(rep["checks"].size() >= 100);
}
