#pragma once

#include <string>
#include <utility>

#include "dense_matrix.hpp"
#include "errors.hpp"
#include "filters.hpp"
#include "spectra.hpp"
#include "sylvester.hpp"

namespace convsolve {

/// Solves A X C = s B through two factorized solves (never explicit
/// inverses). Throws SingularFactor naming the offending side.
DenseMatrix solve_product(const DenseMatrix& a, const DenseMatrix& c, double s,
                          const DenseMatrix& b);

/// Solves A X + X C = B through the vectorized system
/// (I (x) A + C^T (x) I) vec(X) = vec(B). Throws CommonEigenvalue when the
/// system is numerically singular.
DenseMatrix solve_sylvester(const DenseMatrix& a, const DenseMatrix& c,
                            const DenseMatrix& b);

/// Solves sigma X - A X C = B through (sigma I - C^T (x) A) vec(X) = vec(B).
/// Throws ResonantPair when numerically singular.
DenseMatrix solve_stein(const DenseMatrix& a, const DenseMatrix& c,
                        double sigma, const DenseMatrix& b);

/// Solves LHS(X) = B for an arbitrary generalized Sylvester form by dense
/// factorization of the vectorized operator. Throws SingularOperator with
/// the minimal-|lambda| witness.
DenseMatrix solve_general(const SylvesterForm& form, const DenseMatrix& b);

class NotUniquelySolvable : public Error {
 public:
  explicit NotUniquelySolvable(SolvabilityVerdict verdict)
      : Error("not uniquely solvable: " + verdict.condition),
        verdict_(std::move(verdict)) {}

  const SolvabilityVerdict& verdict() const { return verdict_; }

 private:
  SolvabilityVerdict verdict_;
};

struct SolveReport {
  SolvabilityVerdict verdict;
  double residual = 0.0;
  std::string path;  // "product", "sylvester", "stein", or "general"
};

struct SolveResult {
  DenseMatrix solution;
  SolveReport report;
};

/// Solves F*X = B for a catalog filter: consults the analytic verdict,
/// dispatches to the reduced-form solver, and verifies the residual
/// ||convolve(F,X,bc) - B||_max <= 1e-8 (1 + ||B||_max).
/// Throws NotUniquelySolvable or ResidualCheckFailed.
SolveResult solve_convolution(FilterId id, const DenseMatrix& b,
                              BoundaryCondition bc);

/// Generic-kernel variant: numeric verdict, general solver.
SolveResult solve_convolution(const Filter3x3& f, const DenseMatrix& b,
                              BoundaryCondition bc);

}  // namespace convsolve
