#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reduct/report.hpp"
#include "reduct/scenario.hpp"

using namespace reduct;

namespace {

const char* GOOD = R"({
  "name": "demo",
  "mode": "generalized",
  "variables": ["x1", "x2", "x3", "y1", "y2", "y3"],
  "bivector": [
    {"i": "x1", "j": "y1", "coeff": "1"},
    {"i": "x2", "j": "y2", "coeff": "1"},
    {"i": "x3", "j": "y3", "coeff": "1"}
  ],
  "submanifold": ["x1", "x2"],
  "b_fields": [{"x1": "1"}, {"x2": "1", "y1": "-x3"}],
  "degrees": {"check": 2, "work": 4, "sweep": 3}
})";

}  // namespace

TEST_CASE("well-formed scenario parses") {
  ScenarioFile sf = parse_scenario_text(GOOD);
  CHECK(sf.name == "demo");
  CHECK(sf.mode == ScenarioFile::Mode::Generalized);
  CHECK(sf.classical.names.size() == 6);
  CHECK(sf.classical.submanifold == std::set<std::size_t>{0, 1});
  CHECK(sf.classical.b_fields.size() == 2);
  CHECK(sf.classical.pi.component(0, 3) == Polynomial::constant(6, 1));
  CHECK(sf.classical.b_fields[1].component(3) ==
        -parse_polynomial("x3", sf.classical.names));
  CHECK(sf.classical.d_check == 2);
  CHECK(sf.classical.d_work == 4);
}

TEST_CASE("malformed JSON is an input error") {
  CHECK_THROWS_AS(parse_scenario_text("{ not json"), ScenarioError);
  CHECK_THROWS_AS(parse_scenario_text("[1, 2]"), ScenarioError);
}

TEST_CASE("schema violations accumulate") {
  // unknown mode, undeclared bivector variable, missing submanifold
  const char* bad = R"({
    "name": "bad",
    "mode": "generalized",
    "variables": ["x1", "y1"],
    "bivector": [{"i": "x1", "j": "q7", "coeff": "1"}]
  })";
  try {
    parse_scenario_text(bad);
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.errors.size() >= 2);
    bool undeclared = false, missing = false;
    for (const auto& msg : e.errors) {
      if (msg.find("q7") != std::string::npos) undeclared = true;
      if (msg.find("submanifold") != std::string::npos) missing = true;
    }
    CHECK(undeclared);
    CHECK(missing);
  }
}

TEST_CASE("mode requirements are enforced") {
  const char* dirac_no_constraints = R"({
    "mode": "dirac",
    "variables": ["x1", "y1"],
    "bivector": [{"i": "x1", "j": "y1", "coeff": "1"}],
    "submanifold": ["x1"]
  })";
  CHECK_THROWS_AS(parse_scenario_text(dirac_no_constraints), ScenarioError);

  const char* quantum_bad = R"({
    "mode": "quantum",
    "dimension": 2,
    "hbar": "0",
    "b_span": [[["0", "1"], ["2", "0"]]]
  })";
  // both zero hbar and the non-Hermitian matrix are reported
  try {
    parse_scenario_text(quantum_bad);
    FAIL("expected ScenarioError");
  } catch (const ScenarioError& e) {
    CHECK(e.errors.size() >= 2);
  }
}

TEST_CASE("quantum scenario parses matrices") {
  const char* q = R"({
    "mode": "quantum",
    "dimension": 2,
    "hbar": "1/2",
    "b_span": [[["1", "-i"], ["i", "0"]]],
    "s_span": []
  })";
  ScenarioFile sf = parse_scenario_text(q);
  CHECK(sf.mode == ScenarioFile::Mode::Quantum);
  CHECK(sf.quantum.hbar == Rational(1, 2));
  REQUIRE(sf.quantum.b_span.size() == 1);
  CHECK(sf.quantum.b_span[0].at(0, 1) == GaussianRational{0, -1});
  CHECK(sf.quantum.b_span[0].at(1, 0) == GaussianRational{0, 1});
}

TEST_CASE("machine reports are canonical and round trip") {
  Report r;
  r.scenario_name = "demo";
  r.mode = "check";
  r.names = {"x", "y"};
  r.conditions.add("alpha", true);
  r.conditions.add("beta", false, "witness y");
  r.conditions.record_dim("B", 3);
  std::string a = r.to_machine();
  std::string b = r.to_machine();
  CHECK(a == b);                     // deterministic
  CHECK(reemit_machine(a) == a);     // parse + re-emit is the identity
  CHECK(a.find("\"status\": \"FAIL\"") != std::string::npos);
  CHECK(r.exit_code() == 1);
  r.conditions.checks[1].pass = true;
  CHECK(r.exit_code() == 0);
}
