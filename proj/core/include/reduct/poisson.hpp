#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reduct/polynomial.hpp"

namespace reduct {

// Polynomial vector field: one coefficient polynomial per coordinate
// direction. Acts on functions as a derivation.
class PolyVectorField {
 public:
  PolyVectorField() = default;
  explicit PolyVectorField(std::size_t nvars);
  explicit PolyVectorField(std::vector<Polynomial> components);

  std::size_t nvars() const { return comps_.size(); }
  const Polynomial& component(std::size_t i) const { return comps_[i]; }
  void set_component(std::size_t i, Polynomial p);

  /// X f = sum_i X^i d_i f
  Polynomial apply(const Polynomial& f) const;

  friend bool operator==(const PolyVectorField&, const PolyVectorField&) = default;

 private:
  std::vector<Polynomial> comps_;
};

// Antisymmetric bivector Pi^{ij}; only i<j stored, Pi^{ji} = -Pi^{ij}
// structurally. Jacobi is never assumed, always checked.
class PoissonBivector {
 public:
  explicit PoissonBivector(std::size_t nvars) : nvars_(nvars) {}

  static PoissonBivector canonical(std::size_t pairs);  // {x_i, y_i} = 1 on 2*pairs vars

  std::size_t nvars() const { return nvars_; }
  /// Sets Pi^{ij} (requires i < j).
  void set(std::size_t i, std::size_t j, Polynomial coeff);
  /// Pi^{ij} with the antisymmetric sign for i > j; zero for i == j.
  Polynomial component(std::size_t i, std::size_t j) const;
  const std::map<std::pair<std::size_t, std::size_t>, Polynomial>& entries() const {
    return entries_;
  }

  unsigned coefficient_degree() const;

  friend bool operator==(const PoissonBivector&, const PoissonBivector&) = default;

 private:
  std::size_t nvars_;
  std::map<std::pair<std::size_t, std::size_t>, Polynomial> entries_;
};

// Totally antisymmetric trivector, components T^{ijk} stored for i<j<k.
class Trivector {
 public:
  explicit Trivector(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const { return nvars_; }
  void set(std::size_t i, std::size_t j, std::size_t k, Polynomial coeff);
  Polynomial component(std::size_t i, std::size_t j, std::size_t k) const;
  bool is_zero() const { return entries_.empty(); }
  const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Polynomial>& entries() const {
    return entries_;
  }

 private:
  std::size_t nvars_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Polynomial> entries_;
};

/// {f,g} = sum_{i<j} Pi^{ij} (d_i f d_j g - d_j f d_i g)
Polynomial bracket(const PoissonBivector& pi, const Polynomial& f, const Polynomial& g);

/// X_g with X_g f = {g, f}.
PolyVectorField hamiltonian_vf(const PoissonBivector& pi, const Polynomial& g);

/// {f,{g,h}} + {g,{h,f}} + {h,{f,g}}
Polynomial jacobiator(const PoissonBivector& pi, const Polynomial& f, const Polynomial& g,
                      const Polynomial& h);

/// Schouten self-bracket [Pi,Pi]; zero iff the jacobiator vanishes
/// identically. Normalized so T(df,dg,dh) = 2 jacobiator(f,g,h).
Trivector schouten_self(const PoissonBivector& pi);

struct JacobiWitness {
  std::size_t i, j, k;          // indices into the swept monomial list
  Monomial f, g, h;             // the witness triple
  Polynomial residual;          // the nonzero jacobiator
};

struct JacobiReport {
  bool pass = false;
  bool schouten_zero = false;
  bool sweep_clean = false;
  std::optional<JacobiWitness> witness;
};

/// PASS iff schouten_self(pi) = 0; independently confirms by sweeping the
/// jacobiator over all monomial triples of degree <= sweep_degree.
JacobiReport check_jacobi(const PoissonBivector& pi, unsigned sweep_degree = 3);

}  // namespace reduct
