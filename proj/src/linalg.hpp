#pragma once

#include <complex>
#include <vector>

#include "dense_matrix.hpp"

namespace convsolve {

using ComplexScalar = std::complex<double>;

/// Solves A x = b by LU factorization with partial pivoting.
/// Throws SingularMatrix when a pivot magnitude falls at or below
/// 1e-12 * ||A||_inf.
DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b);

/// Multi-right-hand-side variant: solves A X = B column by column
/// through a single factorization.
DenseMatrix lu_solve_matrix(const DenseMatrix& a, const DenseMatrix& b);

/// All eigenvalues (with multiplicity) of a real square matrix, unordered.
/// Computed in extended (long double) precision so that defective pairs are
/// resolved to well below 1e-8 at the sizes this library targets (n <= 64).
/// Throws ConvergenceFailure if the underlying iteration does not settle.
std::vector<ComplexScalar> eig_dense(const DenseMatrix& a);

/// Double-precision variant: faster on large operators, but resolves
/// clustered eigenvalues only to about sqrt(machine epsilon). Suitable where
/// only coarse magnitudes matter.
std::vector<ComplexScalar> eig_dense_fast(const DenseMatrix& a);

}  // namespace convsolve
