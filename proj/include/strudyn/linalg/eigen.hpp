#pragma once

#include <complex>
#include <vector>

#include "strudyn/linalg/dense_matrix.hpp"
#include "strudyn/linalg/sparse_matrix.hpp"

namespace strudyn {

struct SymmetricEigen {
    std::vector<double> values; // ascending
    DenseMatrix vectors;        // column k pairs with values[k]
};

/// Cyclic Jacobi rotations on a symmetric matrix.
SymmetricEigen symmetric_eigen(const DenseMatrix& a);

/// Solves K V = M V diag(lambda) with V^T M V = I. M is reduced by a dense
/// Cholesky factor, so this is meant for pencils of at most a few hundred
/// dofs. Throws SingularMatrixError when M is not positive definite.
SymmetricEigen sym_generalized_eigen(const SparseMatrix& K, const SparseMatrix& M);

/// Smallest eigenvalue of the pencil (K, M) by shifted inverse iteration
/// with a sparse factorization. Suitable for mesh-sized problems.
double smallest_generalized_eigenvalue(const SparseMatrix& K, const SparseMatrix& M, double rel_tol = 1e-12,
                                       int max_iterations = 500);

/// All eigenvalues of a real square matrix. Closed form for n <= 2,
/// Hessenberg QR otherwise (multiple roots of a cubic are too ill-posed
/// for the characteristic polynomial).
std::vector<std::complex<double>> eigenvalues(const DenseMatrix& a);

/// Largest singular value, sqrt(lambda_max(A^T A)).
double spectral_norm(const DenseMatrix& a);

/// Largest eigenvalue modulus.
double spectral_radius(const DenseMatrix& a);

} // namespace strudyn
