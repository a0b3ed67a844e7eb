#pragma once

#include "dense_matrix.hpp"
#include "filters.hpp"

namespace convsolve {

/// Forward convolution B(i,j) = sum_{l1,l2=1..3} f(l1,l2) * x~(i-l1+2, j-l2+2)
/// where x~ extends X one cell past each border by the boundary rule.
/// Requires m, n >= 2 (throws DimensionTooSmall otherwise); output has the
/// shape of X.
DenseMatrix convolve(const Filter3x3& f, const DenseMatrix& x,
                     BoundaryCondition bc);

/// The mn x mn matrix of the vectorized convolution, built column by column
/// from canonical basis matrices: vec(convolve(F,X,bc)) = op * vec(X).
/// Throws SizeCapExceeded when m*n exceeds the configured cap.
DenseMatrix assemble_operator(const Filter3x3& f, BoundaryCondition bc,
                              Index m, Index n);

}  // namespace convsolve
