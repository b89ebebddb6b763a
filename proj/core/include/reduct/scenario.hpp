#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "reduct/classical.hpp"
#include "reduct/hermitian.hpp"

namespace reduct {

struct ScenarioError : std::runtime_error {
  explicit ScenarioError(std::vector<std::string> errs);
  std::vector<std::string> errors;
};

struct QuantumScenario {
  std::size_t dimension = 0;
  Rational hbar = 1;
  std::vector<HermitianElement> b_span;
  std::vector<HermitianElement> s_span;
  std::optional<std::vector<HermitianElement>> b_minus;
  std::optional<std::vector<HermitianElement>> b_plus;
};

// Parsed and validated scenario file.
struct ScenarioFile {
  enum class Mode { Symmetry, Constraint, Dirac, Generalized, Quantum };

  std::string name;
  Mode mode = Mode::Generalized;
  ReductionScenario classical;
  QuantumScenario quantum;
  bool two_stage = false;  // request the two-stage comparison in generalized mode
  // extra polynomial pairs to evaluate in dirac mode
  std::vector<std::pair<Polynomial, Polynomial>> dirac_pairs;
};

/// Parses and schema-validates a scenario. Throws ScenarioError listing
/// every problem found (missing fields, undeclared variables, malformed
/// polynomials or matrix entries).
ScenarioFile parse_scenario_text(const std::string& content);
ScenarioFile parse_scenario(const std::string& path);

const char* mode_name(ScenarioFile::Mode m);

}  // namespace reduct
