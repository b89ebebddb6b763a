#pragma once

#include <vector>

#include "reduct/rational.hpp"

namespace reduct {

// Dense d x d matrix of Gaussian rationals.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t d) : d_(d), e_(d * d) {}

  static ComplexMatrix identity(std::size_t d);

  std::size_t dim() const { return d_; }
  const GaussianRational& at(std::size_t i, std::size_t j) const { return e_[i * d_ + j]; }
  GaussianRational& at(std::size_t i, std::size_t j) { return e_[i * d_ + j]; }

  ComplexMatrix conj_transpose() const;
  bool is_hermitian() const { return *this == conj_transpose(); }
  bool is_zero() const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const GaussianRational& c, const ComplexMatrix& a);
  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<GaussianRational> e_;
};

// Hermitian matrix with Gaussian-rational entries; element of a
// finite-dimensional Lie-Jordan algebra. Construction enforces
// conjugate symmetry.
class HermitianElement {
 public:
  HermitianElement() = default;
  explicit HermitianElement(std::size_t d) : m_(d) {}
  /// Throws std::invalid_argument if m is not conjugate-symmetric.
  explicit HermitianElement(ComplexMatrix m);

  static HermitianElement identity(std::size_t d) { return HermitianElement(ComplexMatrix::identity(d)); }

  std::size_t dim() const { return m_.dim(); }
  const ComplexMatrix& matrix() const { return m_; }
  const GaussianRational& at(std::size_t i, std::size_t j) const { return m_.at(i, j); }
  /// Sets entry (i,j) and its conjugate mirror (j,i).
  void set(std::size_t i, std::size_t j, const GaussianRational& v);
  bool is_zero() const { return m_.is_zero(); }

  friend HermitianElement operator+(const HermitianElement& a, const HermitianElement& b);
  friend HermitianElement operator-(const HermitianElement& a, const HermitianElement& b);
  friend HermitianElement operator*(const Rational& c, const HermitianElement& a);
  friend bool operator==(const HermitianElement&, const HermitianElement&) = default;

 private:
  ComplexMatrix m_;
};

/// a o b = (ab + ba)/2; commutative, Hermitian.
HermitianElement jordan(const HermitianElement& a, const HermitianElement& b);

/// [a,b] = i/(2 hbar) (ab - ba); antisymmetric, Hermitian. Throws on hbar = 0.
HermitianElement lie(const HermitianElement& a, const HermitianElement& b, const Rational& hbar);

/// a . b = a o b - i hbar [a,b]; equals the plain matrix product ab.
ComplexMatrix complexify(const HermitianElement& a, const HermitianElement& b, const Rational& hbar);

/// Real coordinatization basis of the d x d Hermitian space (dimension d^2):
/// E_ii, then for each i<j the symmetric pair E_ij + E_ji and the
/// antisymmetric pair i(E_ij - E_ji), ordered (i,j) ascending.
std::vector<HermitianElement> hermitian_basis(std::size_t d);

/// Real coordinates of h in hermitian_basis(d) order.
std::vector<Rational> hermitian_coords(const HermitianElement& h);

HermitianElement hermitian_from_coords(std::size_t d, const std::vector<Rational>& coords);

/// The 2x2 Pauli matrices.
HermitianElement pauli_x();
HermitianElement pauli_y();
HermitianElement pauli_z();

}  // namespace reduct
