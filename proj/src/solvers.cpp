#include "solvers.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "config.hpp"
#include "conv.hpp"
#include "errors.hpp"
#include "linalg.hpp"

namespace convsolve {

namespace {

// Guards every mn x mn materialization, like the operator builders do.
void check_kronecker_cap(Index m, Index n) {
  if (m * n > size_cap()) {
    throw SizeCapExceeded("vectorized system size " + std::to_string(m * n) +
                          " exceeds cap " + std::to_string(size_cap()));
  }
}

}  // namespace

DenseMatrix solve_product(const DenseMatrix& a, const DenseMatrix& c, double s,
                          const DenseMatrix& b) {
  if (a.rows() != a.cols() || c.rows() != c.cols() || b.rows() != a.rows() ||
      b.cols() != c.rows()) {
    throw ShapeMismatch("solve_product operand shapes mismatch");
  }
  DenseMatrix y;
  try {
    y = lu_solve_matrix(a, s * b);  // A Y = s B
  } catch (const SingularMatrix&) {
    throw SingularFactor(FactorSide::Left);
  }
  try {
    // X C = Y  <=>  C^T X^T = Y^T
    return lu_solve_matrix(c.transpose(), y.transpose()).transpose();
  } catch (const SingularMatrix&) {
    throw SingularFactor(FactorSide::Right);
  }
}

DenseMatrix solve_sylvester(const DenseMatrix& a, const DenseMatrix& c,
                            const DenseMatrix& b) {
  if (a.rows() != a.cols() || c.rows() != c.cols() || b.rows() != a.rows() ||
      b.cols() != c.rows()) {
    throw ShapeMismatch("solve_sylvester operand shapes mismatch");
  }
  const Index m = a.rows();
  const Index n = c.rows();
  check_kronecker_cap(m, n);
  DenseMatrix k = kron(DenseMatrix::identity(n), a);
  k += kron(c.transpose(), DenseMatrix::identity(m));
  try {
    return unvec(lu_solve(k, vec(b)), m, n);
  } catch (const SingularMatrix&) {
    throw CommonEigenvalue("left and negated right matrices share an eigenvalue");
  }
}

DenseMatrix solve_stein(const DenseMatrix& a, const DenseMatrix& c, double sigma,
                        const DenseMatrix& b) {
  if (a.rows() != a.cols() || c.rows() != c.cols() || b.rows() != a.rows() ||
      b.cols() != c.rows()) {
    throw ShapeMismatch("solve_stein operand shapes mismatch");
  }
  const Index m = a.rows();
  const Index n = c.rows();
  check_kronecker_cap(m, n);
  DenseMatrix k = sigma * DenseMatrix::identity(m * n);
  k -= kron(c.transpose(), a);
  try {
    return unvec(lu_solve(k, vec(b)), m, n);
  } catch (const SingularMatrix&) {
    throw ResonantPair("an eigenvalue product equals sigma");
  }
}

DenseMatrix solve_general(const SylvesterForm& form, const DenseMatrix& b) {
  if (b.rows() != form.rows || b.cols() != form.cols) {
    throw ShapeMismatch("solve_general right-hand side shape mismatch");
  }
  const DenseMatrix op = form_to_operator(form);
  try {
    return unvec(lu_solve(op, vec(b)), form.rows, form.cols);
  } catch (const SingularMatrix&) {
    const auto verdict = numeric_solvability(op);
    throw SingularOperator("vectorized operator is singular",
                           verdict.witness.value_or(ComplexScalar(0.0, 0.0)));
  }
}

namespace {

double check_residual(const Filter3x3& f, const DenseMatrix& x,
                      const DenseMatrix& b, BoundaryCondition bc) {
  const double residual = (convolve(f, x, bc) - b).max_abs();
  if (!(residual <= 1e-8 * (1.0 + b.max_abs()))) {
    throw ResidualCheckFailed("solution failed residual verification", residual);
  }
  return residual;
}

}  // namespace

SolveResult solve_convolution(FilterId id, const DenseMatrix& b,
                              BoundaryCondition bc) {
  const Index m = b.rows();
  const Index n = b.cols();
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("solve_convolution requires m >= 2 and n >= 2");
  }
  SolvabilityVerdict verdict = filter_solvability(id, bc, m, n);
  if (verdict.solvable == Solvability::No) {
    throw NotUniquelySolvable(std::move(verdict));
  }
  const ReducedForm reduced = reduce_form(id, bc, m, n);
  DenseMatrix x;
  std::string path;
  if (const auto* p = std::get_if<ProductForm>(&reduced.shape)) {
    x = solve_product(p->left, p->right, p->scale, b);
    path = "product";
  } else if (const auto* sp = std::get_if<SylvesterPairForm>(&reduced.shape)) {
    x = solve_sylvester(sp->left, sp->right, b);
    path = "sylvester";
  } else if (const auto* st = std::get_if<SteinForm>(&reduced.shape)) {
    x = solve_stein(st->left, st->right, st->sigma, b);
    path = "stein";
  } else {
    x = solve_general(std::get<GeneralForm>(reduced.shape).form, b);
    path = "general";
  }
  const double residual = check_residual(filter_kernel(id), x, b, bc);
  return SolveResult{std::move(x), SolveReport{std::move(verdict), residual, path}};
}

SolveResult solve_convolution(const Filter3x3& f, const DenseMatrix& b,
                              BoundaryCondition bc) {
  const Index m = b.rows();
  const Index n = b.cols();
  if (m < 2 || n < 2) {
    throw DimensionTooSmall("solve_convolution requires m >= 2 and n >= 2");
  }
  const SylvesterForm form = build_form(f, bc, m, n);
  SolvabilityVerdict verdict = numeric_solvability(form);
  if (verdict.solvable == Solvability::No) {
    throw NotUniquelySolvable(std::move(verdict));
  }
  DenseMatrix x = solve_general(form, b);
  const double residual = check_residual(f, x, b, bc);
  return SolveResult{std::move(x),
                     SolveReport{std::move(verdict), residual, "general"}};
}

}  // namespace convsolve
