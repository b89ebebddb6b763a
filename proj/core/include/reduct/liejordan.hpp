#pragma once

#include <optional>
#include <vector>

#include "reduct/classical.hpp"  // ConditionReport
#include "reduct/hermitian.hpp"
#include "reduct/subspace.hpp"

namespace reduct {

// Finite-dimensional Lie-Jordan algebra of d x d Hermitian matrices with
// exact rational hbar != 0. The ternary axioms (Jacobi, Leibniz, associator)
// are verified on the standard basis at construction.
class LJAlgebra {
 public:
  LJAlgebra(std::size_t d, Rational hbar);

  std::size_t dim() const { return d_; }
  const Rational& hbar() const { return hbar_; }

  HermitianElement jordan(const HermitianElement& a, const HermitianElement& b) const {
    return reduct::jordan(a, b);
  }
  HermitianElement lie(const HermitianElement& a, const HermitianElement& b) const {
    return reduct::lie(a, b, hbar_);
  }

 private:
  std::size_t d_;
  Rational hbar_;
};

/// Exact check of Jacobi, Leibniz and the associator identity (with the
/// given hbar) on all triples from the sample. Reported as partial when the
/// sample does not span the Hermitian space.
ConditionReport verify_axioms(std::size_t d, const Rational& hbar,
                              const std::vector<HermitianElement>& sample);

// Quotient B/(B cap S) with both induced products as structure-constant
// tables on the representative basis.
struct LJQuotient {
  QuotientPresentation quotient;
  std::vector<HermitianElement> representatives;
  std::map<std::pair<std::size_t, std::size_t>, RatVector> jordan_sc;  // all (i,j)
  std::map<std::pair<std::size_t, std::size_t>, RatVector> lie_sc;
};

struct QuantumCertificate {
  ExplicitSpan b_minus;
  ExplicitSpan b_plus;
};

struct QuantumReduction {
  ConditionReport report;
  std::optional<LJQuotient> quotient;
};

/// The quantum subspace reduction: four weak inclusion conditions, quotient
/// construction with lift-independence audit, ternary-axiom verification on
/// the induced structure, and (optionally) the strong B-/B+ certificate.
QuantumReduction quantum_reduce(const ExplicitSpan& b, const ExplicitSpan& s, const LJAlgebra& alg,
                                const std::optional<QuantumCertificate>& cert = std::nullopt);

/// Exhibits the associator identity (a o b) o c - a o (b o c) = hbar^2 [[a,c],b]
/// on the sample for hbar in {1, 1/2, 1/3}, including the hbar^2 scaling.
ConditionReport classical_limit_compare(std::size_t d, const std::vector<HermitianElement>& sample);

std::string to_string(const HermitianElement& h);

}  // namespace reduct
