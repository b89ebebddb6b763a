#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "reduct/classical.hpp"
#include "reduct/liejordan.hpp"

namespace reduct {

// Pipeline result ready for emission, both human- and machine-readable.
// The machine form is canonical JSON: parsing and re-emitting it is the
// identity on bytes.
struct Report {
  std::string scenario_name;
  std::string mode;
  std::vector<std::string> names;  // variable names for rendering
  ConditionReport conditions;
  std::optional<ReducedBracket> reduced;
  std::optional<LJQuotient> quotient;
  // extra evaluations (dirac mode): f, g, value
  std::vector<std::tuple<std::string, std::string, std::string>> evaluations;

  std::string to_machine() const;
  std::string to_human() const;
  /// 0 when every requested check passed, 1 otherwise.
  int exit_code() const { return conditions.all_pass() ? 0 : 1; }
};

/// Parses a machine report and re-emits it canonically.
std::string reemit_machine(const std::string& text);

}  // namespace reduct
