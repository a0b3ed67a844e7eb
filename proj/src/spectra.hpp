#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "filters.hpp"
#include "linalg.hpp"
#include "sylvester.hpp"

namespace convsolve {

/// Coefficients of a tridiagonal spectrum request: alpha on the diagonal,
/// beta on the superdiagonal, gamma on the subdiagonal, size n.
struct SpectrumRequest {
  double alpha;
  double beta;
  double gamma;
  Index n;
};

/// Closed-form spectrum of the tridiagonal Toeplitz matrix:
///   lambda_k = alpha + 2 sqrt(beta*gamma) cos(k pi / (n+1)),  k = 1..n,
/// with the principal complex square root when beta*gamma < 0.
/// Output is in ascending k order.
std::vector<ComplexScalar> tridiag_toeplitz_eigs(const SpectrumRequest& req);

/// Closed-form spectrum of the circulant matrix with the given first row:
///   lambda_k = sum_{l=0}^{n-1} a_l exp(-2 k l pi i / n),  k = 1..n
/// (k = n yields the row sum). Output is in ascending k order.
std::vector<ComplexScalar> circulant_eigs(const std::vector<double>& first_row);

/// Closed-form spectrum of the tridiagonal Toeplitz matrix perturbed by
/// alpha+gamma at (1,1) and alpha+beta at (n,n):
///   lambda_k = alpha + 2 sqrt(beta*gamma) cos(k pi / n),  k = 1..n-1,
///   lambda_n = alpha + beta + gamma.
std::vector<ComplexScalar> perturbed_tridiag_eigs(const SpectrumRequest& req);

/// Explicit matrices matching the closed forms above (oracle construction).
DenseMatrix tridiag_toeplitz_matrix(const SpectrumRequest& req);
DenseMatrix circulant_matrix(const std::vector<double>& first_row);
DenseMatrix perturbed_tridiag_matrix(const SpectrumRequest& req);

enum class Solvability { No, Yes, ConjecturedYes };

std::string_view solvability_name(Solvability s);

/// Decision record for unique solvability of F*X=B at a given size.
struct SolvabilityVerdict {
  Solvability solvable;
  /// The analytic criterion (for Yes) or the clause that fired (for No).
  std::string condition;
  /// The vanishing quantity for analytic No verdicts; the minimal-|lambda|
  /// eigenvalue for numeric verdicts (present for numeric Yes as well).
  std::optional<ComplexScalar> witness;
  /// Stable identifier of the rule that produced the verdict, e.g.
  /// "box/zero" or "numeric".
  std::string rule;
};

/// Analytic verdict for a catalog filter from the closed-form conditions:
///   box    zero: m,n not in {3l-1}; periodic/reflexive: m,n not in {3l}
///   gus    zero/reflexive: always; periodic: m,n not in {2l}
///   eda    zero: m,n not in {2l-1}; periodic/reflexive: never
///   edb    zero: always; periodic/reflexive: never
///   edc    zero: always; periodic/reflexive: never
///   shp    always
///   emb    zero/periodic: always; reflexive: conjectured yes
SolvabilityVerdict filter_solvability(FilterId id, BoundaryCondition bc,
                                      Index m, Index n);

/// Numeric verdict from the spectrum of the vectorized operator: Yes iff
/// min |lambda| > 1e-8 * ||op||_inf; the minimal eigenvalue is attached as
/// witness either way.
SolvabilityVerdict numeric_solvability(const SylvesterForm& form);
SolvabilityVerdict numeric_solvability(const DenseMatrix& op);

/// All mn eigenvalues of the vectorized emboss-reflexive operator
///   I + (1/2)(kron(L~_n, L~_m) - kron(U~_n, U~_m)),
///   L~ = I + 2L^(R), U~ = I + 2U^(R),
/// sorted by (re, im). Computed internally in extended precision: the
/// operator's eigenvalues are too ill-conditioned for a double-precision
/// general eigensolver to resolve their real parts below ~1e-5.
std::vector<ComplexScalar> emboss_reflexive_spectrum(Index m, Index n);

}  // namespace convsolve
