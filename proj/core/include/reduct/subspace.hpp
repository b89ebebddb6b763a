#pragma once

#include <memory>
#include <set>
#include <vector>

#include "reduct/hermitian.hpp"
#include "reduct/linalg.hpp"
#include "reduct/poisson.hpp"
#include "reduct/polynomial.hpp"

namespace reduct {

// Ordered coordinate basis of a finite-dimensional ambient space: either
// polynomials of degree <= D in n variables (graded-lex monomial order) or
// d x d Hermitian matrices (E_ii, then symmetric/antisymmetric pairs).
class AmbientBasis {
 public:
  enum class Kind { Polynomials, Hermitian };

  static AmbientBasis polynomials(std::size_t nvars, unsigned degree);
  static AmbientBasis hermitian(std::size_t matrix_dim);

  Kind kind() const { return kind_; }
  std::size_t dimension() const;

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  std::size_t matrix_dim() const { return dim_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }

  /// Coordinates of f; throws std::out_of_range if deg f exceeds the ambient degree.
  RatVector coords(const Polynomial& f) const;
  Polynomial poly_from_coords(const RatVector& v) const;
  RatVector coords(const HermitianElement& h) const;
  HermitianElement herm_from_coords(const RatVector& v) const;

  friend bool operator==(const AmbientBasis&, const AmbientBasis&) = default;

 private:
  Kind kind_ = Kind::Polynomials;
  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  std::size_t dim_ = 0;  // Hermitian matrix dimension
  std::vector<Monomial> monomials_;
};

// Linear subspace held as a reduced row-echelon matrix of coordinates.
// The echelon form is canonical: two spans are equal iff their matrices are.
class ExplicitSpan {
 public:
  explicit ExplicitSpan(AmbientBasis ambient) : ambient_(std::move(ambient)) {}

  static ExplicitSpan from_rows(AmbientBasis ambient, RatMatrix raw_rows);
  static ExplicitSpan from_polys(const AmbientBasis& ambient, const std::vector<Polynomial>& gens);
  static ExplicitSpan full(AmbientBasis ambient);

  const AmbientBasis& ambient() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const RatMatrix& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Polynomial> basis_polys() const;

  /// Residual of v after eliminating this span's pivot coordinates; zero iff v
  /// is in the span.
  RatVector reduce(RatVector v) const;
  bool contains(const RatVector& v) const;
  bool contains(const Polynomial& f) const { return contains(ambient_.coords(f)); }
  bool contains_span(const ExplicitSpan& other) const;

  friend bool operator==(const ExplicitSpan&, const ExplicitSpan&) = default;

 private:
  AmbientBasis ambient_;
  RatMatrix rows_;
  std::vector<std::size_t> pivots_;
};

ExplicitSpan span_sum(const ExplicitSpan& a, const ExplicitSpan& b);
ExplicitSpan span_intersect(const ExplicitSpan& a, const ExplicitSpan& b);

// Quotient A/B presented by a representative basis together with the
// canonical-representative map (reduction modulo B's echelon rows).
class QuotientPresentation {
 public:
  QuotientPresentation(ExplicitSpan sub, RatMatrix representatives);

  const AmbientBasis& ambient() const { return sub_.ambient(); }
  const ExplicitSpan& subspace() const { return sub_; }
  std::size_t dim() const { return reps_.size(); }
  const RatMatrix& representatives() const { return reps_; }

  /// Canonical representative: linear, idempotent, canon(v) = 0 iff v in B.
  RatVector canon(const RatVector& v) const { return sub_.reduce(v); }
  /// Coordinates of canon(v) in the representative basis; throws if v is not
  /// in B + span(representatives).
  RatVector class_coords(const RatVector& v) const;

 private:
  ExplicitSpan sub_;
  RatMatrix reps_;  // rows already fixed under canon
};

/// Quotient A/B. Throws std::invalid_argument unless B is contained in A.
/// Quotient by the zero space returns A's own basis as representatives;
/// quotient of equal spaces has dimension zero.
QuotientPresentation quotient(const ExplicitSpan& a, const ExplicitSpan& b);

// Rule-defined subspace of the polynomial algebra with exact membership at
// any degree; truncation to degree D produces a consistent ExplicitSpan.
class StructuredSpace {
 public:
  enum class Rule { VanishingIdeal, InvariantSpace, RestrictedInvariantSpace, NormalizerSpace };

  static StructuredSpace vanishing_ideal(std::size_t nvars, std::set<std::size_t> coords);
  static StructuredSpace invariant_space(std::vector<PolyVectorField> fields);
  static StructuredSpace restricted_invariant_space(std::vector<PolyVectorField> fields,
                                                    std::set<std::size_t> coords);
  static StructuredSpace normalizer_space(PoissonBivector pi, std::set<std::size_t> coords);

  Rule rule() const { return rule_; }
  std::size_t nvars() const { return nvars_; }
  const std::set<std::size_t>& coords() const { return coords_; }
  const std::vector<PolyVectorField>& fields() const { return fields_; }

  /// Defining residuals; f is a member iff every residual is zero.
  std::vector<Polynomial> residuals(const Polynomial& f) const;
  bool member(const Polynomial& f) const;

  /// Span of all members of degree <= D, via the kernel of the residual map
  /// on the monomial basis.
  ExplicitSpan truncate(unsigned degree) const;

 private:
  Rule rule_;
  std::size_t nvars_ = 0;
  std::set<std::size_t> coords_;
  std::vector<PolyVectorField> fields_;
  std::shared_ptr<const PoissonBivector> pi_;
};

}  // namespace reduct
