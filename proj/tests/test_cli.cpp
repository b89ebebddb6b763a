#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  std::string out;
  int exit_code = -1;
};

std::string env_or_fail(const char* name) {
  const char* v = std::getenv(name);
  REQUIRE_MESSAGE(v != nullptr, name << " must be set");
  return v;
}

RunResult run(const std::string& args) {
  std::string cmd = env_or_fail("REDUCT_BIN") + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Golden {
  const char* scenario;
  const char* subcommand;
  int exit_code;
};

constexpr Golden GOLDENS[] = {
    {"example1_lambda_x3", "reduce-general", 1},
    {"example1_lambda_y1y2", "reduce-general", 0},
    {"example1_lambda_const", "reduce-general", 0},
    {"example2_lambda_const", "certify", 0},
    {"example2_lambda_x3", "certify", 1},
    {"dirac_second_class", "dirac", 0},
    {"first_class_single", "reduce-constraint", 1},
    {"quantum_block_diag", "quantum-reduce", 0},
    {"quantum_not_subalgebra", "quantum-reduce", 1},
    {"quantum_full_space", "quantum-reduce", 0},
};

}  // namespace

TEST_CASE("golden machine reports are reproduced byte for byte") {
  std::string dir = env_or_fail("REDUCT_SCENARIOS");
  for (const auto& g : GOLDENS) {
    CAPTURE(g.scenario);
    RunResult r = run(std::string(g.subcommand) + " --scenario " + dir + "/" + g.scenario +
                      ".json --format machine");
    CHECK(r.exit_code == g.exit_code);
    CHECK(r.out == slurp(dir + "/golden/" + std::string(g.scenario) + ".json"));
  }
}

TEST_CASE("identical input gives identical output") {
  std::string dir = env_or_fail("REDUCT_SCENARIOS");
  std::string args = "reduce-general --scenario " + dir + "/example1_lambda_x3.json --format machine";
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("invalid input exits with code 2") {
  std::string dir = env_or_fail("REDUCT_SCENARIOS");
  CHECK(run("reduce-general --scenario /nonexistent.json").exit_code == 2);
  CHECK(run("reduce-general").exit_code == 2);         // missing required flag
  CHECK(run("no-such-subcommand").exit_code == 2);

  std::string bad = "/tmp/reduct_bad_scenario.json";
  std::ofstream(bad) << "{ \"mode\": \"generalized\" }";
  CHECK(run("reduce-general --scenario " + bad).exit_code == 2);

  // mode mismatch between subcommand and scenario
  CHECK(run("dirac --scenario " + dir + "/example1_lambda_x3.json").exit_code == 2);
  CHECK(run("quantum-reduce --scenario " + dir + "/example1_lambda_x3.json").exit_code == 2);
  CHECK(run("reduce-general --scenario " + dir + "/quantum_block_diag.json").exit_code == 2);
}

TEST_CASE("report flag writes the same bytes as stdout") {
  std::string dir = env_or_fail("REDUCT_SCENARIOS");
  std::string path = "/tmp/reduct_report_copy.json";
  RunResult r = run("quantum-reduce --scenario " + dir +
                    "/quantum_block_diag.json --format machine --report " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == slurp(path));
  std::remove(path.c_str());
}

TEST_CASE("human format mentions every check") {
  std::string dir = env_or_fail("REDUCT_SCENARIOS");
  RunResult r = run("certify --scenario " + dir + "/example2_lambda_x3.json --format human");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("strong_a") != std::string::npos);
  CHECK(r.out.find("[FAIL]") != std::string::npos);
  CHECK(r.out.find("CHECK FAILURES PRESENT") != std::string::npos);
}

TEST_CASE("search harness is deterministic per seed") {
  RunResult a = run("search --seed 5");
  RunResult b = run("search --seed 5");
  CHECK(a.out == b.out);
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("classical trials") != std::string::npos);
}
