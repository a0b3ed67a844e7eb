#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace convsolve {

using Index = std::int64_t;

/// Dense real matrix with row-major storage. The mathematical contracts in
/// this library are stated with 1-based indices; accessors here are 0-based.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(Index rows, Index cols);

  static DenseMatrix identity(Index n);
  static DenseMatrix from_rows(
      std::initializer_list<std::initializer_list<double>> rows);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  Index size() const { return rows_ * cols_; }

  double& operator()(Index i, Index j) { return data_[i * cols_ + j]; }
  double operator()(Index i, Index j) const { return data_[i * cols_ + j]; }

  const double* data() const { return data_.data(); }
  double* data() { return data_.data(); }

  DenseMatrix transpose() const;

  /// Largest entry magnitude.
  double max_abs() const;
  /// Induced infinity norm (maximum absolute row sum).
  double inf_norm() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double scalar);

 private:
  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs);
DenseMatrix operator-(const DenseMatrix& m);
DenseMatrix operator*(double scalar, DenseMatrix m);
DenseMatrix operator*(DenseMatrix m, double scalar);
DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);

/// Column-stacking vectorization: vec(X) is mn x 1 with
/// vec(X)(i + (j-1)m) = X(i,j) in 1-based terms.
DenseMatrix vec(const DenseMatrix& x);

/// Inverse of vec for an mn x 1 (or 1 x mn) vector.
DenseMatrix unvec(const DenseMatrix& v, Index rows, Index cols);

/// Kronecker product; satisfies vec(A X C^T) = (C (x) A) vec(X).
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace convsolve
