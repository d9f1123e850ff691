#pragma once

#include <vector>

#include "uin/matrix.hpp"

namespace uin {

// Full SVD of a square complex block: F = U * diag(values) * V^H,
// values descending. U and V carry completed orthonormal frames even for
// rank-deficient input.
struct SvdResult {
    std::vector<double> values;
    Matrix U;
    Matrix V;
};

// One-sided (Hestenes) Jacobi with cyclic sweeps. Columns of a working copy
// are rotated until all pairwise dot products fall below 1e-13 relative to
// the column scales; at most 60 sweeps.
//
// Throws std::invalid_argument for non-square input or NaN/Inf entries.
SvdResult svd_finite(const Matrix& F);

// Singular values only (still runs the full factorization; convenience).
std::vector<double> singular_values_of(const Matrix& F);

// Eigenvalues of a Hermitian matrix by cyclic two-sided Jacobi, descending.
// The input is symmetrized (Hermitian part) before iterating, so slightly
// non-Hermitian input from accumulated roundoff is fine.
std::vector<double> hermitian_eigenvalues(const Matrix& H);

}  // namespace uin
