#include "linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "errors.hpp"

namespace convsolve {

namespace {

using EigenRowMajor =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EigenMap = Eigen::Map<const EigenRowMajor>;

EigenMap to_eigen(const DenseMatrix& m) {
  return EigenMap(m.data(), m.rows(), m.cols());
}

DenseMatrix from_eigen(const Eigen::MatrixXd& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

Eigen::PartialPivLU<Eigen::MatrixXd> factor_or_throw(const DenseMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch("lu_solve expects a square matrix");
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(to_eigen(a));
  const double threshold = 1e-12 * a.inf_norm();
  const auto diag = lu.matrixLU().diagonal();
  for (Index i = 0; i < diag.size(); ++i) {
    if (std::abs(diag(i)) <= threshold) {
      throw SingularMatrix("pivot below 1e-12 * ||A||_inf");
    }
  }
  return lu;
}

}  // namespace

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b) {
  if (b.cols() != 1 || b.rows() != a.rows()) {
    throw ShapeMismatch("lu_solve right-hand side must be a conformal vector");
  }
  return lu_solve_matrix(a, b);
}

DenseMatrix lu_solve_matrix(const DenseMatrix& a, const DenseMatrix& b) {
  if (b.rows() != a.rows()) {
    throw ShapeMismatch("lu_solve_matrix right-hand side rows mismatch");
  }
  auto lu = factor_or_throw(a);
  Eigen::MatrixXd x = lu.solve(Eigen::MatrixXd(to_eigen(b)));
  return from_eigen(x);
}

namespace {

template <typename Scalar>
std::vector<ComplexScalar> eig_impl(const DenseMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeMismatch("eig_dense expects a square matrix");
  }
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Matrix work(a.rows(), a.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) work(i, j) = static_cast<Scalar>(a(i, j));
  Eigen::EigenSolver<Matrix> solver(work, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceFailure("eigenvalue iteration did not converge");
  }
  std::vector<ComplexScalar> out;
  out.reserve(static_cast<std::size_t>(a.rows()));
  for (Index i = 0; i < a.rows(); ++i) {
    out.emplace_back(static_cast<double>(solver.eigenvalues()(i).real()),
                     static_cast<double>(solver.eigenvalues()(i).imag()));
  }
  return out;
}

}  // namespace

std::vector<ComplexScalar> eig_dense(const DenseMatrix& a) {
  return eig_impl<long double>(a);
}

std::vector<ComplexScalar> eig_dense_fast(const DenseMatrix& a) {
  return eig_impl<double>(a);
}

}  // namespace convsolve
