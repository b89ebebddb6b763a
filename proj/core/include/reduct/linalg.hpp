#pragma once

#include <optional>
#include <vector>

#include "reduct/rational.hpp"

namespace reduct {

using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;  // row-major

/// In-place reduced row echelon form; drops zero rows; returns pivot columns
/// (ascending, one per surviving row).
std::vector<std::size_t> rref(RatMatrix& m);

/// Basis of the null space {x : A x = 0}, rows of the result, echelonized.
RatMatrix kernel(const RatMatrix& a, std::size_t ncols);

/// One solution of A x = b with all free variables set to zero (the solution
/// supported on the earliest possible columns), or nullopt if inconsistent.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Exact inverse; nullopt if singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

Rational determinant(RatMatrix m);

RatMatrix identity_matrix(std::size_t n);

}  // namespace reduct
