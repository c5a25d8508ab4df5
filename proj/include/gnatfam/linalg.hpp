#pragma once

// Small dense exact linear algebra over Z and Q. Matrices are row lists;
// sizes here are the ambient dimension n, so nothing is tuned for speed.

#include "gnatfam/rational.hpp"

#include <optional>
#include <vector>

namespace gnatfam::linalg {

using IntMatrix = std::vector<IntVector>;
using RationalMatrix = std::vector<RationalVector>;

/// Triangular basis of the full-rank lattice spanned by `rows` (n columns).
/// Row i of the result has zeros after column i and a positive pivot at i;
/// entries left of a pivot are reduced into [0, pivot of that column).
IntMatrix lower_hermite_basis(const IntMatrix& rows, std::size_t n);

/// Reduces `m` modulo the lattice with basis `hnf` (as returned above) to
/// the unique representative with 0 <= m_i < hnf[i][i].
IntVector reduce_mod(const IntMatrix& hnf, IntVector m);

Rational determinant(RationalMatrix a);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<RationalMatrix> inverse(RationalMatrix a);

/// Row vector times matrix.
RationalVector row_times(const RationalVector& v, const RationalMatrix& a);

RationalMatrix transpose(const RationalMatrix& a);

std::int64_t lcm_of_denominators(const RationalMatrix& a);

}  // namespace gnatfam::linalg
