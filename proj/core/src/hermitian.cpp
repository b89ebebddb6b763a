#include "reduct/hermitian.hpp"

#include <stdexcept>

namespace reduct {

ComplexMatrix ComplexMatrix::identity(std::size_t d) {
  ComplexMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) m.at(i, i) = GaussianRational(Rational(1));
  return m;
}

ComplexMatrix ComplexMatrix::conj_transpose() const {
  ComplexMatrix m(d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

bool ComplexMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

static void check_dims(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_dims(a, b);
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_dims(a, b);
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  check_dims(a, b);
  const std::size_t d = a.dim();
  ComplexMatrix r(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
    }
  return r;
}

ComplexMatrix operator*(const GaussianRational& c, const ComplexMatrix& a) {
  ComplexMatrix r(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) r.at(i, j) = c * a.at(i, j);
  return r;
}

HermitianElement::HermitianElement(ComplexMatrix m) : m_(std::move(m)) {
  if (!m_.is_hermitian()) throw std::invalid_argument("matrix is not Hermitian");
}

void HermitianElement::set(std::size_t i, std::size_t j, const GaussianRational& v) {
  if (i == j && v.im != 0) throw std::invalid_argument("diagonal entries must be real");
  m_.at(i, j) = v;
  if (i != j) m_.at(j, i) = v.conj();
}

HermitianElement operator+(const HermitianElement& a, const HermitianElement& b) {
  return HermitianElement(a.m_ + b.m_);
}

HermitianElement operator-(const HermitianElement& a, const HermitianElement& b) {
  return HermitianElement(a.m_ - b.m_);
}

HermitianElement operator*(const Rational& c, const HermitianElement& a) {
  return HermitianElement(GaussianRational(c) * a.m_);
}

HermitianElement jordan(const HermitianElement& a, const HermitianElement& b) {
  ComplexMatrix ab = a.matrix() * b.matrix();
  ComplexMatrix ba = b.matrix() * a.matrix();
  return HermitianElement(GaussianRational(Rational(1, 2)) * (ab + ba));
}

HermitianElement lie(const HermitianElement& a, const HermitianElement& b, const Rational& hbar) {
  if (hbar == 0) throw std::invalid_argument("lie bracket undefined at hbar = 0");
  ComplexMatrix comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  GaussianRational factor(Rational(0), Rational(1) / (2 * hbar));  // i/(2 hbar)
  return HermitianElement(factor * comm);
}

ComplexMatrix complexify(const HermitianElement& a, const HermitianElement& b, const Rational& hbar) {
  if (hbar == 0) throw std::invalid_argument("complexify undefined at hbar = 0");
  GaussianRational minus_i_hbar(Rational(0), -hbar);
  return jordan(a, b).matrix() + minus_i_hbar * lie(a, b, hbar).matrix();
}

std::vector<HermitianElement> hermitian_basis(std::size_t d) {
  std::vector<HermitianElement> out;
  for (std::size_t i = 0; i < d; ++i) {
    HermitianElement e(d);
    e.set(i, i, GaussianRational(Rational(1)));
    out.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      HermitianElement s(d);
      s.set(i, j, GaussianRational(Rational(1)));
      out.push_back(std::move(s));
      HermitianElement a(d);
      a.set(i, j, GaussianRational(Rational(0), Rational(1)));
      out.push_back(std::move(a));
    }
  return out;
}

std::vector<Rational> hermitian_coords(const HermitianElement& h) {
  const std::size_t d = h.dim();
  std::vector<Rational> out;
  out.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) out.push_back(h.at(i, i).re);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      out.push_back(h.at(i, j).re);
      out.push_back(h.at(i, j).im);
    }
  return out;
}

HermitianElement hermitian_from_coords(std::size_t d, const std::vector<Rational>& coords) {
  if (coords.size() != d * d) throw std::invalid_argument("hermitian_from_coords: bad coordinate count");
  HermitianElement h(d);
  std::size_t p = 0;
  for (std::size_t i = 0; i < d; ++i) h.set(i, i, GaussianRational(coords[p++]));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      Rational re = coords[p++];
      Rational im = coords[p++];
      h.set(i, j, GaussianRational(re, im));
    }
  return h;
}

HermitianElement pauli_x() {
  HermitianElement h(2);
  h.set(0, 1, GaussianRational(Rational(1)));
  return h;
}

HermitianElement pauli_y() {
  HermitianElement h(2);
  h.set(0, 1, GaussianRational(Rational(0), Rational(-1)));
  return h;
}

HermitianElement pauli_z() {
  HermitianElement h(2);
  h.set(0, 0, GaussianRational(Rational(1)));
  h.set(1, 1, GaussianRational(Rational(-1)));
  return h;
}

}  // namespace reduct
