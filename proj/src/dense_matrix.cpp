#include "dense_matrix.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace convsolve {

DenseMatrix::DenseMatrix(Index rows, Index cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("DenseMatrix dimensions must be >= 1");
  }
}

DenseMatrix DenseMatrix::identity(Index n) {
  DenseMatrix m(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  DenseMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c) {
      throw std::invalid_argument("ragged row list");
    }
    Index j = 0;
    for (double v : row) m(i, j++) = v;
    ++i;
  }
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (Index i = 0; i < rows_; ++i)
    for (Index j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::inf_norm() const {
  double m = 0.0;
  for (Index i = 0; i < rows_; ++i) {
    double s = 0.0;
    for (Index j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
    m = std::max(m, s);
  }
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeMismatch("matrix addition shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw ShapeMismatch("matrix subtraction shape mismatch");
  }
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double scalar) {
  for (double& v : data_) v *= scalar;
  return *this;
}

DenseMatrix operator+(DenseMatrix lhs, const DenseMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

DenseMatrix operator-(DenseMatrix lhs, const DenseMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

DenseMatrix operator-(const DenseMatrix& m) {
  DenseMatrix r = m;
  r *= -1.0;
  return r;
}

DenseMatrix operator*(double scalar, DenseMatrix m) {
  m *= scalar;
  return m;
}

DenseMatrix operator*(DenseMatrix m, double scalar) {
  m *= scalar;
  return m;
}

DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) {
    throw ShapeMismatch("matrix product shape mismatch");
  }
  DenseMatrix out(lhs.rows(), rhs.cols());
  for (Index i = 0; i < lhs.rows(); ++i) {
    for (Index k = 0; k < lhs.cols(); ++k) {
      const double a = lhs(i, k);
      if (a == 0.0) continue;
      for (Index j = 0; j < rhs.cols(); ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix vec(const DenseMatrix& x) {
  DenseMatrix v(x.rows() * x.cols(), 1);
  Index k = 0;
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i) v(k++, 0) = x(i, j);
  return v;
}

DenseMatrix unvec(const DenseMatrix& v, Index rows, Index cols) {
  if (v.size() != rows * cols || (v.rows() != 1 && v.cols() != 1)) {
    throw ShapeMismatch("unvec length mismatch");
  }
  DenseMatrix x(rows, cols);
  Index k = 0;
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) x(i, j) = v.data()[k++];
  return x;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      const double w = a(i, j);
      if (w == 0.0) continue;
      for (Index p = 0; p < b.rows(); ++p)
        for (Index q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = w * b(p, q);
    }
  }
  return out;
}

}  // namespace convsolve
