#include "reduct/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace reduct {

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

RatMatrix kernel(const RatMatrix& a, std::size_t ncols) {
  RatMatrix m = a;
  for (auto& row : m)
    if (row.size() != ncols) throw std::invalid_argument("kernel: ragged matrix");
  auto pivots = rref(m);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RatMatrix out;
  for (std::size_t c = 0; c < ncols; ++c) {
    if (is_pivot[c]) continue;
    RatVector v(ncols, Rational(0));
    v[c] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
    out.push_back(std::move(v));
  }
  rref(out);
  return out;
}

std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: size mismatch");
  if (a.empty()) return RatVector{};
  const std::size_t cols = a[0].size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  RatVector x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == cols) return std::nullopt;  // row (0 ... 0 | 1)
    x[pivots[r]] = aug[r][cols];
  }
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("inverse: not square");
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(i == j ? Rational(1) : Rational(0));
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() >= n)) return std::nullopt;
  RatMatrix inv(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Rational determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m[sel][c] == 0) ++sel;
    if (sel == n) return Rational(0);
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = 1 / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = m[i][c] * inv;
      if (f == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, RatVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace reduct
