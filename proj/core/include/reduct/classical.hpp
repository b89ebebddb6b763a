#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reduct/poisson.hpp"
#include "reduct/polynomial.hpp"
#include "reduct/subspace.hpp"

namespace reduct {

struct ConditionCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // witness description on FAIL, notes on PASS
};

struct ConditionReport {
  std::vector<ConditionCheck> checks;
  std::vector<std::pair<std::string, std::size_t>> dimensions;

  void add(std::string name, bool pass, std::string detail = "");
  void record_dim(std::string name, std::size_t value);
  bool all_pass() const;
  const ConditionCheck* find(const std::string& name) const;
};

// Input data for the classical pipelines. Vector-field and constraint data
// all live on the same n-variable ambient; `submanifold` is the coordinate
// set K cutting out N = {x_k = 0}.
struct ReductionScenario {
  std::vector<std::string> names;  // variable display names, size n
  PoissonBivector pi{0};
  std::set<std::size_t> submanifold;
  std::vector<PolyVectorField> b_fields;
  std::vector<PolyVectorField> e_fields;
  std::vector<Polynomial> constraints;
  std::vector<PolyVectorField> b_minus_fields;        // strong certificate, global fields
  std::optional<std::vector<PolyVectorField>> b_plus_fields;  // default: B itself
  unsigned d_check = 2;
  unsigned d_work = 4;   // lift search degree, default d_check + 2
  unsigned d_sweep = 3;  // jacobiator sweep bound

  std::size_t nvars() const { return pi.nvars(); }
};

// Induced bracket on a quotient. Classes are identified with their
// restrictions to N (the second isomorphism theorem identification), so
// `representatives` and the structure values are polynomials in the
// N-variables.
struct ReducedBracket {
  std::set<std::size_t> submanifold;
  std::vector<Polynomial> representatives;
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> structure;  // i < j
  std::optional<PoissonBivector> bivector;
  std::optional<JacobiReport> jacobi;

  Polynomial structure_value(std::size_t i, std::size_t j) const;
};

struct ReductionOutcome {
  ConditionReport report;
  std::optional<ReducedBracket> reduced;
};

/// Symmetry reduction: invariant functions of the given fields, Lie-closure
/// check, restricted bracket on PASS.
ReductionOutcome reduce_by_symmetries(const ReductionScenario& s);

/// Second-class test for the given constraints: the constraint bracket
/// matrix C restricted to N must be invertible at the origin. Also reports
/// whether the truncations of N + I span the full degree-d_check space.
ConditionReport second_class_check(const ReductionScenario& s);

/// Dirac bracket {f,g} - {f,phi_a} (C^-1)^{ab} {phi_b,g}. C^-1 is exact when
/// C is constant, else a power-series inverse truncated at d_work. Throws
/// std::domain_error when C is singular at the origin.
Polynomial dirac_bracket(const ReductionScenario& s, const Polynomial& f, const Polynomial& g);

/// Constraint reduction via the Lie normalizer: the quotient N/(N cap I)
/// with its induced bracket, plus the second-class diagnostics when
/// constraints are present.
ReductionOutcome reduce_by_constraints(const ReductionScenario& s);

/// Generalized subspace reduction: weak conditions, induced bracket on
/// B/(B cap I), lift-independence audit, Jacobi audit. Jacobi failure is a
/// reported result, never an error.
ReductionOutcome generalized_reduce(const ReductionScenario& s);

/// Reduced bivector on the N-variables: lifts each N-coordinate into B at
/// degree <= d_work and brackets the lifts. Components involving K
/// directions are zero. Throws std::domain_error naming the coordinate when
/// a lift is infeasible.
PoissonBivector reduced_bivector(const ReductionScenario& s);

/// Strong-condition certificate (the B-/B+ sandwich): inclusion and sum
/// checks plus both strong conditions; PASS guarantees the induced bracket
/// satisfies Jacobi, which is cross-checked against the direct audit.
ReductionOutcome certify_strong(const ReductionScenario& s);

/// Constraints-then-symmetries with E = B cap TN, compared exactly against
/// the generalized reduction on the common representatives.
ReductionOutcome two_stage_reduce(const ReductionScenario& s);

/// Lift of target (a polynomial in the N-variables) into the degree-d
/// truncation of the structured space, with restriction equal to target.
std::optional<Polynomial> lift_into(const StructuredSpace& space, const Polynomial& target,
                                    const std::set<std::size_t>& K, unsigned degree);

}  // namespace reduct
