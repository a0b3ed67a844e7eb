#include "conv.hpp"

#include <string>

#include "config.hpp"
#include "errors.hpp"

namespace convsolve {

namespace {

// Maps an extended 0-based index in [-1, size] into the grid, or -1 for a
// zero-padded cell. The kernel reaches at most one cell past the border, and
// the row and column rules compose independently for all three conditions.
inline Index extend_index(Index i, Index size, BoundaryCondition bc) {
  if (i >= 0 && i < size) return i;
  switch (bc) {
    case BoundaryCondition::Zero:
      return -1;
    case BoundaryCondition::Periodic:
      return (i + size) % size;
    case BoundaryCondition::Reflexive:
      return i < 0 ? 0 : size - 1;
  }
  return -1;
}

}  // namespace

DenseMatrix convolve(const Filter3x3& f, const DenseMatrix& x,
                     BoundaryCondition bc) {
  const Index m = x.rows();
  const Index n = x.cols();
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("convolve requires m >= 2 and n >= 2");
  }
  DenseMatrix b(m, n);
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < n; ++j) {
      double sum = 0.0;
      for (Index l1 = 0; l1 < 3; ++l1) {
        const Index ri = extend_index(i - l1 + 1, m, bc);
        if (ri < 0) continue;
        for (Index l2 = 0; l2 < 3; ++l2) {
          const Index cj = extend_index(j - l2 + 1, n, bc);
          if (cj < 0) continue;
          sum += f(l1, l2) * x(ri, cj);
        }
      }
      b(i, j) = sum;
    }
  }
  return b;
}

DenseMatrix assemble_operator(const Filter3x3& f, BoundaryCondition bc,
                              Index m, Index n) {
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("assemble_operator requires m >= 2 and n >= 2");
  }
  const Index size = m * n;
  if (size > size_cap()) {
    throw SizeCapExceeded("operator size " + std::to_string(size) +
                          " exceeds cap " + std::to_string(size_cap()));
  }
  DenseMatrix op(size, size);
  DenseMatrix basis(m, n);
  for (Index col = 0; col < size; ++col) {
    const Index p = col % m;
    const Index q = col / m;
    basis(p, q) = 1.0;
    const DenseMatrix image = convolve(f, basis, bc);
    basis(p, q) = 0.0;
    Index row = 0;
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < m; ++i) op(row++, col) = image(i, j);
  }
  return op;
}

}  // namespace convsolve
