#pragma once

#include <Eigen/Dense>

#include "symsolve/errors.hpp"

namespace symsolve {

using DenseMatrix = Eigen::MatrixXd;
using DenseVector = Eigen::VectorXd;

struct EigResult {
    DenseVector eigenvalues;  // ascending
    DenseMatrix eigenvectors; // columns, unit norm
};

// Orthonormal basis of { v : ||A v|| <= rel_tol * sigma_max * ||v|| }.
//
// The raw SVD basis of a kernel is arbitrary up to rotation, so the result is
// canonicalized: we form the kernel projector (basis independent) and extract
// columns by pivoted Gram-Schmidt, breaking near-ties toward the lowest
// coordinate index. Coordinate-aligned kernels therefore come out as
// coordinate vectors in natural order. Each column is then flipped so its
// largest-magnitude entry (first such entry on ties) is positive.
DenseMatrix svd_nullspace(const DenseMatrix& A, double rel_tol = 1e-10);

// Symmetric eigendecomposition, eigenvalues ascending. Input must be
// symmetric to 1e-12 relative; eigenvector signs follow the same
// largest-entry-positive convention as svd_nullspace.
EigResult sym_eig(const DenseMatrix& S);

// Gram-Schmidt orthonormalization of the columns of V (two passes).
// The first output column is parallel to the first input column, and every
// diagonal projection <q_k, v_k> is positive, which makes the result unique.
// Throws degeneracy_error if sigma_min(V) <= 1e-10 * sigma_max(V).
DenseMatrix gram_orthonormalize(const DenseMatrix& V);

} // namespace symsolve
